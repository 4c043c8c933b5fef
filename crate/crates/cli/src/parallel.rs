//! Exhaustive runs spread over a rayon pool. Results are merged with the
//! core crate's commutative merges, so they match the sequential runs.

use cograph_bei_core::enumeration::{
    enumerate_cotrees, BoundTable, VerificationReport, Verifier, VERIFY_LIMIT,
};
use cograph_bei_core::{Cotree, Error};
use rayon::prelude::*;

/// Caps the worker count when set to a positive integer.
pub const THREADS_ENV: &str = "COGRAPH_BEI_THREADS";

fn pool() -> rayon::ThreadPool {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

fn all_cotrees(operation: &'static str, n_max: usize) -> Result<Vec<Cotree>, Error> {
    if n_max > VERIFY_LIMIT {
        return Err(Error::SizeGuard { operation, limit: VERIFY_LIMIT, got: n_max });
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_cotrees(n)?);
    }
    Ok(out)
}

pub fn verify_parallel(n_max: usize) -> Result<VerificationReport, Error> {
    let trees = all_cotrees("verification", n_max)?;
    let verifier = Verifier::default();
    let mut rep = pool().install(|| {
        trees
            .par_iter()
            .map(|t| verifier.check_cotree(t))
            .reduce(VerificationReport::default, |mut a, b| {
                a.merge(b);
                a
            })
    });
    rep.finish(n_max);
    Ok(rep)
}

pub fn table_parallel(n_max: usize) -> Result<BoundTable, Error> {
    let trees = all_cotrees("bound comparison", n_max)?;
    Ok(pool().install(|| {
        trees.par_iter().map(BoundTable::for_cotree).reduce(BoundTable::default, |mut a, b| {
            a.merge(&b);
            a
        })
    }))
}
