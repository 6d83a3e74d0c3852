use super::{metric_closure, Graph};
use crate::error::{Error, Result};

pub const MAX_HELD_KARP_VERTICES: usize = 14;

/// Exact optimal tour cost over the shortest-path metric, by bitmask DP.
pub fn held_karp_opt(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n > MAX_HELD_KARP_VERTICES {
        return Err(Error::Capacity {
            what: "held_karp_opt",
            n,
            max: MAX_HELD_KARP_VERTICES,
        });
    }
    g.ensure_connected()?;
    if n <= 1 {
        return Ok(0.0);
    }
    let d = metric_closure(g);
    // vertex 0 is the fixed start; bit i of a mask stands for vertex i + 1
    let k = n - 1;
    let full = 1usize << k;
    let mut dp = vec![f64::INFINITY; full * k];
    for j in 0..k {
        dp[(1 << j) * k + j] = d[0][j + 1];
    }
    for mask in 1..full {
        for j in 0..k {
            let cur = dp[mask * k + j];
            if mask & (1 << j) == 0 || !cur.is_finite() {
                continue;
            }
            for t in 0..k {
                if mask & (1 << t) != 0 {
                    continue;
                }
                let slot = &mut dp[(mask | (1 << t)) * k + t];
                let cand = cur + d[j + 1][t + 1];
                if cand < *slot {
                    *slot = cand;
                }
            }
        }
    }
    Ok((0..k)
        .map(|j| dp[(full - 1) * k + j] + d[j + 1][0])
        .fold(f64::INFINITY, f64::min))
}
