//! Exact graded discrepancy for small instances.
//!
//! The definition minimizes, over all vertex orderings, the maximum scaled
//! prefix discrepancy. Prefix sets of an ordering form exactly a maximal
//! chain of subsets, so the optimum over orderings equals the optimum over
//! maximal chains, and a dynamic program over all 2^n subsets computes it:
//!
//! ```text
//! f(S) = max( |e(S)*C(n,k) - m*C(|S|,k)| , min_{v in S} f(S \ {v}) )
//! ```
//!
//! with f(empty) = 0 and the answer f(V). The chain/ordering equivalence is
//! exercised by `exact_grdisc_enum`, a direct minimum over all n!
//! permutations, and the two must agree exactly.

use crate::discrepancy::DiscContext;
use crate::error::Error;
use crate::hypergraph::UniformHypergraph;

/// Default vertex cap for the subset dynamic program.
pub const DEFAULT_DP_CAP: usize = 22;

/// Vertex cap for the permutation-enumeration oracle.
pub const ENUM_CAP: usize = 8;

/// Budget for the three subset tables (edge counts, values, predecessors).
const MEMORY_BUDGET_BYTES: u128 = 2 << 30;

/// Exact scaled graded discrepancy plus one witness ordering attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub scaled: i128,
    pub ordering: Vec<u32>,
}

/// Subset dynamic program with the default vertex cap.
pub fn exact_grdisc_dp(h: &UniformHypergraph) -> Result<ExactResult, Error> {
    exact_grdisc_dp_capped(h, DEFAULT_DP_CAP)
}

/// Subset dynamic program with an explicit vertex cap.
pub fn exact_grdisc_dp_capped(h: &UniformHypergraph, cap: usize) -> Result<ExactResult, Error> {
    let n = h.vertex_count();
    if n > cap {
        return Err(Error::InstanceTooLarge { n, cap });
    }
    if n == 0 {
        return Ok(ExactResult {
            scaled: 0,
            ordering: vec![],
        });
    }
    let required = (1u128 << n) * (4 + 8 + 1);
    if required > MEMORY_BUDGET_BYTES {
        return Err(Error::MemoryBudgetExceeded {
            required_bytes: required,
            budget_bytes: MEMORY_BUDGET_BYTES,
        });
    }
    let ctx = DiscContext::for_hypergraph(h)?;
    let denom64 = i64::try_from(ctx.denom()).map_err(|_| Error::Overflow)?;
    // Largest |N| over any subset is at most C(n,k)^2; it must fit i64 so
    // the value table can stay at 8 bytes per subset.
    ctx.denom()
        .checked_mul(ctx.denom())
        .and_then(|x| i64::try_from(x).ok())
        .ok_or(Error::Overflow)?;
    let m_choose: Vec<i64> = (0..=n)
        .map(|c| i64::try_from(ctx.m() as i128 * ctx.choose_k(c)).map_err(|_| Error::Overflow))
        .collect::<Result<_, _>>()?;

    let mut edge_masks: Vec<Vec<u32>> = vec![Vec::new(); n];
    for e in h.edges() {
        let mask = e.iter().fold(0u32, |acc, &v| acc | (1 << v));
        let lowest = e[0] as usize;
        edge_masks[lowest].push(mask);
    }

    let size = 1usize << n;
    let mut e_table = vec![0u32; size];
    let mut f_table = vec![0i64; size];
    let mut best_last = vec![0u8; size];

    // Layers in increasing popcount; within a layer, Gosper's hack walks the
    // subsets in increasing numeric order.
    for c in 1..=n {
        let layer_m = m_choose[c];
        let count = layer_size(n, c);
        let mut s: u32 = (1u32 << c) - 1;
        for _ in 0..count {
            let su = s as usize;
            let low = s.trailing_zeros() as usize;
            let without_low = su & (su - 1);
            let mut e = e_table[without_low];
            for &mask in &edge_masks[low] {
                if mask & s == mask {
                    e += 1;
                }
            }
            e_table[su] = e;
            let local = (e as i64 * denom64 - layer_m).abs();
            let mut best_prev = i64::MAX;
            let mut best_v = 0u8;
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                let prev = f_table[su ^ (1 << v)];
                if prev < best_prev {
                    best_prev = prev;
                    best_v = v as u8;
                }
            }
            f_table[su] = local.max(best_prev);
            best_last[su] = best_v;
            s = gosper_next(s);
        }
    }

    let full = size - 1;
    let mut ordering = vec![0u32; n];
    let mut s = full;
    for i in (0..n).rev() {
        let v = best_last[s] as u32;
        ordering[i] = v;
        s ^= 1 << v;
    }
    Ok(ExactResult {
        scaled: f_table[full] as i128,
        ordering,
    })
}

fn layer_size(n: usize, c: usize) -> usize {
    // C(n, c) for n <= 26 fits usize comfortably.
    let mut acc: usize = 1;
    for i in 0..c {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn gosper_next(s: u32) -> u32 {
    let u = s & s.wrapping_neg();
    let up = s.wrapping_add(u);
    up | (((s ^ up) >> 2) / u.max(1))
}

/// Direct transcription of the definition: minimum over all n! orderings of
/// the maximum scaled prefix discrepancy.
pub fn exact_grdisc_enum(h: &UniformHypergraph) -> Result<i128, Error> {
    let n = h.vertex_count();
    if n > ENUM_CAP {
        return Err(Error::InstanceTooLarge { n, cap: ENUM_CAP });
    }
    if n == 0 {
        return Ok(0);
    }
    let ctx = DiscContext::for_hypergraph(h)?;
    let denom = ctx.denom();
    let m_choose: Vec<i128> = (0..=n).map(|c| ctx.m() as i128 * ctx.choose_k(c)).collect();
    let k = h.uniformity() as u32;

    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut placed = vec![0u32; h.edge_count()];
    let mut best = i128::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut e = 0i128;
        let mut max_abs = 0i128;
        for (i, &v) in p.iter().enumerate() {
            for &ei in h.incidence(v) {
                placed[ei as usize] += 1;
                if placed[ei as usize] == k {
                    e += 1;
                }
            }
            let scaled = (e * denom - m_choose[i + 1]).abs();
            max_abs = max_abs.max(scaled);
        }
        best = best.min(max_abs);
        for x in placed.iter_mut() {
            *x = 0;
        }
    });
    Ok(best)
}

fn permute(arr: &mut Vec<u32>, l: usize, visit: &mut impl FnMut(&[u32])) {
    if l == arr.len() {
        visit(arr);
        return;
    }
    for i in l..arr.len() {
        arr.swap(l, i);
        permute(arr, l + 1, visit);
        arr.swap(l, i);
    }
}
