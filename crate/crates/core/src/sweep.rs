//! Data-parallel batch helpers. With the default `parallel` feature
//! the heavy loops fan out over rayon; without it they run on the
//! same code path sequentially, so results are identical either way.

use crate::convex::optimum_cycle;
use crate::error::Result;
use crate::geom::Color;
use crate::route::{verify_route, AltRoute, VerifyReport};
use crate::set::BicoloredSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Exact pairwise crossing count of an edge set over `set`, checked
/// with the exact orientation predicate (general position) or the
/// interleaving test (convex). Parallelized over the first edge index.
pub fn crossing_count_pairwise(set: &BicoloredSet, edges: &[(usize, usize)]) -> usize {
    let count_row = |i: usize| -> usize {
        (i + 1..edges.len())
            .filter(|&j| set.edges_cross(edges[i], edges[j]))
            .count()
    };
    #[cfg(feature = "parallel")]
    {
        (0..edges.len()).into_par_iter().map(count_row).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..edges.len()).map(count_row).sum()
    }
}

/// Optimum-cycle crossing count for a batch of convex color sequences.
pub fn solve_cycles_batch(sequences: &[Vec<Color>]) -> Vec<Result<usize>> {
    let solve = |colors: &Vec<Color>| -> Result<usize> {
        let set = BicoloredSet::from_color_sequence(colors)?;
        Ok(optimum_cycle(&set)?.crossing_count())
    };
    #[cfg(feature = "parallel")]
    {
        sequences.par_iter().map(solve).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        sequences.iter().map(solve).collect()
    }
}

/// Verify a batch of routes against their sets.
pub fn verify_batch(jobs: &[(BicoloredSet, AltRoute)]) -> Vec<VerifyReport> {
    let check = |(set, route): &(BicoloredSet, AltRoute)| verify_route(set, route);
    #[cfg(feature = "parallel")]
    {
        jobs.par_iter().map(check).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.iter().map(check).collect()
    }
}
