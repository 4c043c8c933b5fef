use cograph_bei::formats::{parse_edgelist, parse_graph6, to_edgelist, to_graph6};
use cograph_bei::json::GraphJson;
use cograph_bei_core::Graph;
use petgraph::graph::UnGraph;
use petgraph::graph6::{from_graph6_representation, ToGraph6};
use proptest::prelude::*;

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn reference_encoding(g: &Graph) -> String {
    let mut pg = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..g.n()).map(|_| pg.add_node(())).collect();
    for (u, v) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    pg.graph6_string()
}

#[test]
fn triangle_matches_reference_encoder() {
    assert_eq!(reference_encoding(&Graph::complete(3)), "Bw");
    assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
}

proptest! {
    #[test]
    fn graph6_agrees_with_reference(g in any_graph(62)) {
        prop_assert_eq!(to_graph6(&g), reference_encoding(&g));
        let (n, edges) = from_graph6_representation::<u32>(to_graph6(&g));
        let theirs = Graph::from_edges(n, edges.into_iter().map(|(u, v)| (u as usize, v as usize)));
        prop_assert_eq!(theirs.unwrap(), g);
    }

    #[test]
    fn graph6_roundtrip(g in any_graph(80)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edgelist_roundtrip(g in any_graph(30)) {
        prop_assert_eq!(parse_edgelist(&to_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn json_roundtrip(g in any_graph(20)) {
        let s = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        let back: GraphJson = serde_json::from_str(&s).unwrap();
        prop_assert!(back.edges.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(back.edges.iter().all(|[u, v]| u < v));
        prop_assert_eq!(Graph::try_from(&back).unwrap(), g);
    }
}
