//! Exact scaled discrepancy arithmetic over vertex-ordering prefixes.
//!
//! A prefix with i vertices and e_i induced edges deviates from the density
//! line by e_i - p*C(i,k) where p = m/C(n,k). Scaling by C(n,k) turns this
//! into the integer N_i = e_i*C(n,k) - m*C(i,k), so every comparison in the
//! crate is exact; rationals and decimals appear only at reporting
//! boundaries.

use crate::binomial::BinomialTable;
use crate::error::Error;
use crate::hypergraph::UniformHypergraph;

/// Fixed evaluation context (n, k, m) with the binomial columns needed for
/// prefix arithmetic. The implied denominator of every scaled value is
/// C(n, k).
#[derive(Debug, Clone)]
pub struct DiscContext {
    n: usize,
    k: usize,
    m: usize,
    denom: i128,
    table: BinomialTable,
}

impl DiscContext {
    pub fn new(n: usize, k: usize, m: usize) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::UniformityTooSmall { k });
        }
        let table = BinomialTable::new(n, k)?;
        let denom = table.choose_k(n);
        if m as i128 > denom {
            return Err(Error::InvalidContext { m, max_edges: denom });
        }
        Ok(Self {
            n,
            k,
            m,
            denom,
            table,
        })
    }

    pub fn for_hypergraph(h: &UniformHypergraph) -> Result<Self, Error> {
        Self::new(h.vertex_count(), h.uniformity(), h.edge_count())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// C(n, k), the common denominator of all scaled values.
    pub fn denom(&self) -> i128 {
        self.denom
    }

    /// C(i, k) for i <= n.
    pub fn choose_k(&self, i: usize) -> i128 {
        self.table.choose_k(i)
    }

    /// C(i, k-1) for i <= n.
    pub fn choose_km1(&self, i: usize) -> i128 {
        self.table.choose_km1(i)
    }

    /// Scaled discrepancy of a prefix of size `i` holding `e_i` edges:
    /// N = e_i*C(n,k) - m*C(i,k).
    pub fn local_disc_scaled(&self, e_i: usize, i: usize) -> Result<ScaledDisc, Error> {
        debug_assert!(i <= self.n);
        debug_assert!(e_i as i128 <= self.choose_k(i));
        let lhs = (e_i as i128)
            .checked_mul(self.denom)
            .ok_or(Error::Overflow)?;
        let rhs = (self.m as i128)
            .checked_mul(self.choose_k(i))
            .ok_or(Error::Overflow)?;
        let numerator = lhs.checked_sub(rhs).ok_or(Error::Overflow)?;
        Ok(ScaledDisc { numerator })
    }

    /// Scaled form of the ordering guarantee max{p, 1-p}*C(n-1, k-1):
    /// max{m, C(n,k)-m} * C(n-1, k-1).
    pub fn theorem_bound_scaled(&self) -> Result<i128, Error> {
        if self.n == 0 {
            return Ok(0);
        }
        let side = (self.m as i128).max(self.denom - self.m as i128);
        side.checked_mul(self.choose_km1(self.n - 1))
            .ok_or(Error::Overflow)
    }
}

/// A signed exact scaled discrepancy value; the denominator C(n, k) is
/// carried by the context that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScaledDisc {
    pub numerator: i128,
}

impl ScaledDisc {
    pub fn new(numerator: i128) -> Self {
        ScaledDisc { numerator }
    }
}

/// Positive and negative parts (max(N,0), max(-N,0)); the larger of the two
/// is |N|.
pub fn one_sided_parts(d: ScaledDisc) -> (i128, i128) {
    (d.numerator.max(0), (-d.numerator).max(0))
}

/// One prefix row of an evaluated ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixRow {
    /// Prefix size i, 1-based.
    pub i: usize,
    /// Induced edge count e_i.
    pub edges: usize,
    /// N_i = e_i*C(n,k) - m*C(i,k).
    pub scaled: i128,
}

/// Full per-prefix evaluation of one vertex ordering.
#[derive(Debug, Clone)]
pub struct PrefixProfile {
    pub ordering: Vec<u32>,
    pub rows: Vec<PrefixRow>,
    pub max_abs_scaled: i128,
    pub bound_scaled: i128,
}

/// Comparison of a profile against the scaled ordering guarantee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub within_bound: bool,
    /// Smallest violating prefix size, when any.
    pub first_violation_index: Option<usize>,
    pub max_abs_scaled: i128,
    pub bound_scaled: i128,
}

/// Evaluates an ordering: e_i is accumulated incrementally (an edge counts
/// at the step its last vertex is placed), so the work is proportional to
/// n + m*k.
pub fn evaluate_ordering(h: &UniformHypergraph, ordering: &[u32]) -> Result<PrefixProfile, Error> {
    let n = h.vertex_count();
    if ordering.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut position = vec![usize::MAX; n];
    for (idx, &v) in ordering.iter().enumerate() {
        if v as usize >= n || position[v as usize] != usize::MAX {
            return Err(Error::NotAPermutation);
        }
        position[v as usize] = idx + 1;
    }
    let ctx = DiscContext::for_hypergraph(h)?;
    let mut completed_at = vec![0usize; n + 1];
    for e in h.edges() {
        let step = e.iter().map(|&v| position[v as usize]).max().unwrap();
        completed_at[step] += 1;
    }
    let mut rows = Vec::with_capacity(n);
    let mut e_count = 0usize;
    let mut max_abs = 0i128;
    for i in 1..=n {
        e_count += completed_at[i];
        let scaled = ctx.local_disc_scaled(e_count, i)?.numerator;
        max_abs = max_abs.max(scaled.abs());
        rows.push(PrefixRow {
            i,
            edges: e_count,
            scaled,
        });
    }
    Ok(PrefixProfile {
        ordering: ordering.to_vec(),
        rows,
        max_abs_scaled: max_abs,
        bound_scaled: ctx.theorem_bound_scaled()?,
    })
}

/// Compares a profile's max |N_i| against its scaled bound, exactly.
pub fn certify(profile: &PrefixProfile) -> BoundCertificate {
    let within = profile.max_abs_scaled <= profile.bound_scaled;
    let first_violation_index = if within {
        None
    } else {
        profile
            .rows
            .iter()
            .find(|r| r.scaled.abs() > profile.bound_scaled)
            .map(|r| r.i)
    };
    BoundCertificate {
        within_bound: within,
        first_violation_index,
        max_abs_scaled: profile.max_abs_scaled,
        bound_scaled: profile.bound_scaled,
    }
}

/// min over vertices v of |m*C(n-1,k-1) - d(v)*C(n,k)|.
///
/// Every ordering ends with some (n-1)-prefix, so this is a valid scaled
/// lower bound on the graded discrepancy of the instance.
pub fn first_deletion_bound(h: &UniformHypergraph) -> Result<i128, Error> {
    let n = h.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let ctx = DiscContext::for_hypergraph(h)?;
    let target = (ctx.m() as i128)
        .checked_mul(ctx.choose_km1(n - 1))
        .ok_or(Error::Overflow)?;
    let mut best: Option<i128> = None;
    for &d in h.degrees() {
        let scaled = (d as i128)
            .checked_mul(ctx.denom())
            .ok_or(Error::Overflow)?;
        let dist = target.checked_sub(scaled).ok_or(Error::Overflow)?.abs();
        best = Some(match best {
            Some(b) => b.min(dist),
            None => dist,
        });
    }
    Ok(best.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{clique, disjoint_union, isolated, matchings};

    fn path3() -> UniformHypergraph {
        UniformHypergraph::new(3, 2, vec![vec![0, 1], vec![1, 2]]).unwrap()
    }

    /// K_4 u K_2 u 2K_1: n = 8, m = 7, degrees {3, 1, 0}.
    fn remark_graph() -> UniformHypergraph {
        disjoint_union(&[
            clique(4, 2).unwrap(),
            matchings(1).unwrap(),
            isolated(2, 2).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn local_disc_values() {
        let ctx = DiscContext::new(3, 2, 2).unwrap();
        assert_eq!(ctx.local_disc_scaled(1, 2).unwrap().numerator, 1);
        assert_eq!(ctx.local_disc_scaled(0, 1).unwrap().numerator, 0);
        assert_eq!(ctx.local_disc_scaled(2, 3).unwrap().numerator, 0);
    }

    #[test]
    fn invalid_context_rejected() {
        assert!(matches!(
            DiscContext::new(3, 2, 4),
            Err(Error::InvalidContext { m: 4, .. })
        ));
    }

    #[test]
    fn profile_path3() {
        let g = path3();
        let p = evaluate_ordering(&g, &[0, 1, 2]).unwrap();
        let scaled: Vec<i128> = p.rows.iter().map(|r| r.scaled).collect();
        assert_eq!(scaled, vec![0, 1, 0]);
        assert_eq!(p.max_abs_scaled, 1);
        assert_eq!(p.bound_scaled, 4);
        assert!(certify(&p).within_bound);
    }

    #[test]
    fn profile_trivial_densities() {
        let empty = isolated(5, 2).unwrap();
        let p = evaluate_ordering(&empty, &[4, 3, 2, 1, 0]).unwrap();
        assert!(p.rows.iter().all(|r| r.scaled == 0));

        let kn = clique(5, 2).unwrap();
        let p = evaluate_ordering(&kn, &[2, 0, 4, 1, 3]).unwrap();
        assert!(p.rows.iter().all(|r| r.scaled == 0));
    }

    #[test]
    fn bad_orderings_rejected() {
        let g = path3();
        assert!(matches!(
            evaluate_ordering(&g, &[0, 1]),
            Err(Error::NotAPermutation)
        ));
        assert!(matches!(
            evaluate_ordering(&g, &[0, 1, 1]),
            Err(Error::NotAPermutation)
        ));
        assert!(matches!(
            evaluate_ordering(&g, &[0, 1, 3]),
            Err(Error::NotAPermutation)
        ));
    }

    #[test]
    fn theorem_bound_values() {
        // n=8, k=2, m=7: max{7, 21} * 7 = 147.
        assert_eq!(
            DiscContext::new(8, 2, 7).unwrap().theorem_bound_scaled().unwrap(),
            147
        );
        // p = 1: bound is C(n,2)*(n-1).
        let full = DiscContext::new(6, 2, 15).unwrap();
        assert_eq!(full.theorem_bound_scaled().unwrap(), 15 * 5);
        // n=5, k=3, m=5: max{5,5} * C(4,2) = 30.
        assert_eq!(
            DiscContext::new(5, 3, 5).unwrap().theorem_bound_scaled().unwrap(),
            30
        );
    }

    #[test]
    fn bound_symmetry() {
        for (n, k) in [(7usize, 2usize), (9, 3), (10, 4)] {
            let total = DiscContext::new(n, k, 0).unwrap().denom();
            for m in 0..=total as usize {
                let a = DiscContext::new(n, k, m)
                    .unwrap()
                    .theorem_bound_scaled()
                    .unwrap();
                let b = DiscContext::new(n, k, total as usize - m)
                    .unwrap()
                    .theorem_bound_scaled()
                    .unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn one_sided() {
        assert_eq!(one_sided_parts(ScaledDisc::new(5)), (5, 0));
        assert_eq!(one_sided_parts(ScaledDisc::new(-3)), (0, 3));
        assert_eq!(one_sided_parts(ScaledDisc::new(0)), (0, 0));
    }

    #[test]
    fn first_deletion_examples() {
        // Degrees {3,1,0}: distances {35, 21, 49} -> 21.
        assert_eq!(first_deletion_bound(&remark_graph()).unwrap(), 21);
        assert_eq!(first_deletion_bound(&clique(6, 2).unwrap()).unwrap(), 0);
        assert_eq!(first_deletion_bound(&isolated(4, 2).unwrap()).unwrap(), 0);
        assert!(matches!(
            first_deletion_bound(&isolated(0, 2).unwrap()),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn incremental_matches_recount() {
        let g = remark_graph();
        let ordering = [5u32, 0, 7, 3, 1, 6, 2, 4];
        let p = evaluate_ordering(&g, &ordering).unwrap();
        for row in &p.rows {
            let prefix: Vec<u32> = ordering[..row.i].to_vec();
            assert_eq!(g.induced_edge_count(&prefix).unwrap(), row.edges);
        }
        // Forced zeros at both ends.
        assert_eq!(p.rows[0].scaled, 0);
        assert_eq!(p.rows.last().unwrap().scaled, 0);
    }
}
