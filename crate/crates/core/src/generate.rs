//! Seeded random k-degenerate graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Vertices are added in id order; vertex `i >= 1` joins `min(k, i)` distinct
/// earlier vertices drawn with [`SplitMix64::sample_distinct`]. So `0..n` is
/// an ordering with left degree at most `k`.
///
/// While `Δ < delta_min`, vertices `j` not adjacent to vertex 0 (visited in a
/// seeded shuffle) trade one of their earlier edges for the edge `j 0`. Left
/// degrees are unchanged, so the identity ordering still certifies `k`.
pub fn generate_k_degenerate(n: usize, k: usize, delta_min: usize, seed: u64) -> Result<Graph> {
    if n == 0 || k == 0 {
        return Err(Error::Generation(format!("need n >= 1 and k >= 1, got n={n}, k={k}")));
    }
    if delta_min > n - 1 {
        return Err(Error::Generation(format!(
            "max degree {delta_min} unreachable with {n} vertices"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut left: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut deg = vec![0usize; n];
    for i in 1..n {
        let mut picks = rng.sample_distinct(i, k.min(i));
        picks.sort_unstable();
        for &j in &picks {
            deg[i] += 1;
            deg[j] += 1;
        }
        left[i] = picks;
    }

    if deg.iter().max().copied().unwrap_or(0) < delta_min {
        let mut candidates: Vec<usize> = (1..n).filter(|&j| left[j][0] != 0).collect();
        rng.shuffle(&mut candidates);
        let mut it = candidates.into_iter();
        while deg.iter().max().copied().unwrap_or(0) < delta_min {
            let j = it.next().ok_or_else(|| {
                Error::Generation(format!("could not raise max degree to {delta_min}"))
            })?;
            let slot = rng.index(left[j].len());
            let x = left[j][slot];
            deg[x] -= 1;
            deg[0] += 1;
            left[j].remove(slot);
            left[j].insert(0, 0);
        }
    }

    let mut g = Graph::new(n);
    for (i, picks) in left.iter().enumerate() {
        for &j in picks {
            g.add_edge(j, i)?;
        }
    }
    Ok(g)
}
