//! Generators for the extremal lower-bound families, their basic building
//! blocks, the capped filler hypergraph, and seeded random instances.
//!
//! Irrational quantities (square and k-th roots of the density) are used
//! only to derive integer sizes, with an exactness guard on the floor; all
//! discrepancy arithmetic downstream stays exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::binomial::binomial;
use crate::discrepancy::first_deletion_bound;
use crate::error::Error;
use crate::hypergraph::UniformHypergraph;

/// Exact rational used for densities and derived counts.
pub type Rational = BigRational;

pub fn rational(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn rat_int(v: i128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn rat_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn rat_pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// sqrt(p) when p is a square of a rational, in lowest terms.
pub fn sqrt_exact(p: &Rational) -> Option<Rational> {
    if p.is_negative() {
        return None;
    }
    let num = p.numer();
    let den = p.denom();
    let rn = num.sqrt();
    let rd = den.sqrt();
    if &rn.clone() * &rn == *num && &rd.clone() * &rd == *den {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

fn to_usize(v: &BigInt, what: &str) -> Result<usize, Error> {
    v.to_usize()
        .ok_or_else(|| Error::NegativeCount(format!("{what} = {v} does not fit a count")))
}

/// Complete k-uniform hypergraph on `size` vertices (no edges if size < k).
pub fn clique(size: usize, k: usize) -> Result<UniformHypergraph, Error> {
    if k < 2 {
        return Err(Error::UniformityTooSmall { k });
    }
    let mut edges = Vec::new();
    if size >= k {
        let mut cur: Vec<u32> = (0..k as u32).collect();
        loop {
            edges.push(cur.clone());
            if !colex_next(&mut cur, size) {
                break;
            }
        }
    }
    UniformHypergraph::new(size, k, edges)
}

/// `copies` disjoint single edges (k = 2 only).
pub fn matchings(copies: usize) -> Result<UniformHypergraph, Error> {
    let edges = (0..copies)
        .map(|i| vec![2 * i as u32, 2 * i as u32 + 1])
        .collect();
    UniformHypergraph::new(2 * copies, 2, edges)
}

/// `count` isolated vertices with uniformity `k`.
pub fn isolated(count: usize, k: usize) -> Result<UniformHypergraph, Error> {
    UniformHypergraph::new(count, k, vec![])
}

/// Disjoint union; vertex ids are relabeled consecutively part by part, in
/// the order given. An empty union is the empty graph with k = 2.
pub fn disjoint_union(parts: &[UniformHypergraph]) -> Result<UniformHypergraph, Error> {
    let k = match parts.first() {
        Some(p) => p.uniformity(),
        None => 2,
    };
    let mut n = 0usize;
    let mut edges = Vec::new();
    for part in parts {
        if part.uniformity() != k {
            return Err(Error::UniformityMismatch {
                expected: k,
                found: part.uniformity(),
            });
        }
        for e in part.edges() {
            edges.push(e.iter().map(|&v| v + n as u32).collect());
        }
        n += part.vertex_count();
    }
    UniformHypergraph::new(n, k, edges)
}

/// Colexicographic successor of a strictly increasing k-tuple over
/// `0..vertex_count`. Returns false once exhausted.
fn colex_next(t: &mut [u32], vertex_count: usize) -> bool {
    let k = t.len();
    for i in 0..k {
        let limit = if i + 1 < k {
            t[i + 1]
        } else {
            vertex_count as u32
        };
        if t[i] + 1 < limit {
            t[i] += 1;
            for (j, slot) in t.iter_mut().enumerate().take(i) {
                *slot = j as u32;
            }
            return true;
        }
    }
    false
}

/// Scans k-subsets of `0..vertex_count` in colexicographic order, skipping
/// any subset that would push a member above `degree_cap`, until
/// `target_edges` are accepted. Returns the edges and the realized maximum
/// degree.
pub fn filler_bounded_degree(
    vertex_count: usize,
    k: usize,
    target_edges: usize,
    degree_cap: usize,
) -> Result<(Vec<Vec<u32>>, usize), Error> {
    if target_edges == 0 {
        return Ok((Vec::new(), 0));
    }
    if vertex_count < k || degree_cap == 0 {
        return Err(Error::FillerInfeasible {
            target: target_edges,
            accepted: 0,
            cap: degree_cap,
        });
    }
    let mut deg = vec![0usize; vertex_count];
    let mut cur: Vec<u32> = (0..k as u32).collect();
    let mut edges = Vec::with_capacity(target_edges);
    loop {
        if cur.iter().all(|&v| deg[v as usize] < degree_cap) {
            for &v in &cur {
                deg[v as usize] += 1;
            }
            edges.push(cur.clone());
            if edges.len() == target_edges {
                let max_degree = deg.iter().copied().max().unwrap_or(0);
                return Ok((edges, max_degree));
            }
        }
        if !colex_next(&mut cur, vertex_count) {
            return Err(Error::FillerInfeasible {
                target: target_edges,
                accepted: edges.len(),
                cap: degree_cap,
            });
        }
    }
}

/// Which side of the density split a family instance uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyBranch {
    Low,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalMode {
    /// All derived counts must be exact non-negative integers.
    Strict,
    /// Counts are rounded; vertex and edge totals are rebalanced through
    /// the matching and isolated parts, and the realized density is
    /// reported.
    Rounded,
}

/// Derived parameters of a graph-family instance.
#[derive(Debug, Clone)]
pub struct ExtremalGraphSpec {
    pub n: usize,
    pub branch: FamilyBranch,
    /// Requested density.
    pub p: Rational,
    pub clique_size: usize,
    pub clique_copies: usize,
    pub matching_copies: usize,
    pub isolated_count: usize,
}

/// Derived parameters of a hypergraph-family instance.
#[derive(Debug, Clone)]
pub struct ExtremalHypergraphSpec {
    pub n: usize,
    pub k: usize,
    pub branch: FamilyBranch,
    pub p: Rational,
    pub clique_size: usize,
    pub clique_copies: usize,
    pub filler_target_edges: usize,
    /// Initial degree cap handed to the filler scan.
    pub filler_degree_cap: usize,
}

#[derive(Debug, Clone)]
pub struct FillerReport {
    pub target_edges: usize,
    pub vertex_count: usize,
    pub initial_cap: usize,
    pub final_cap: usize,
    pub realized_max_degree: usize,
    pub retries: usize,
}

/// Realized quantities of a built family instance. The first-deletion bound
/// is always recomputed from the actual instance, never from formulas.
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    /// Realized density m / C(n, k).
    pub p: Rational,
    pub first_deletion_bound_scaled: i128,
    /// Scaled lower-bound expression for this family, exact when the roots
    /// involved are rational.
    pub lower_expr_scaled: Option<Rational>,
    /// Unscaled lower-bound expression, floating approximation.
    pub lower_expr_value: f64,
    /// (degree, multiplicity), ascending.
    pub degree_multiset: Vec<(usize, usize)>,
    pub branch: FamilyBranch,
    /// Whether (n, p) lies inside the density regime assumed by the
    /// high-branch guarantee; instances outside it are still built and
    /// reported.
    pub regime_ok: bool,
    pub filler: Option<FillerReport>,
}

struct GraphCounts {
    clique_size: usize,
    clique_copies: usize,
    matching_copies: usize,
    isolated_count: usize,
}

fn strict_graph_counts(n: usize, p: &Rational, branch: FamilyBranch) -> Result<GraphCounts, String> {
    let nr = rat_usize(n);
    let (cs, copies, mc, iso) = match branch {
        FamilyBranch::Low => {
            let cs = rat_int(2) * p * &nr;
            let copies = Rational::one() / (rat_int(4) * p);
            let mc = (Rational::one() - rat_int(2) * p) * &nr / rat_int(4);
            let iso = p * &nr;
            (cs, copies, mc, iso)
        }
        FamilyBranch::High => {
            let sq = sqrt_exact(p).ok_or_else(|| {
                "p is not the square of a rational, so the clique size sqrt(p)*n cannot be an integer".to_string()
            })?;
            let cs = &sq * &nr;
            let copies = Rational::one();
            let mc = (&sq - p) * &nr / rat_int(2);
            let iso = rat_pow(&(Rational::one() - &sq), 2) * &nr;
            (cs, copies, mc, iso)
        }
    };
    let mut out = [0usize; 4];
    for (slot, (name, value)) in out.iter_mut().zip([
        ("clique size", &cs),
        ("clique copies", &copies),
        ("matching copies", &mc),
        ("isolated count", &iso),
    ]) {
        if !value.is_integer() {
            return Err(format!("{name} = {value} is not an integer"));
        }
        if value.is_negative() {
            return Err(format!("{name} = {value} is negative"));
        }
        *slot = value.to_integer().to_usize().ok_or(format!("{name} too large"))?;
    }
    Ok(GraphCounts {
        clique_size: out[0],
        clique_copies: out[1],
        matching_copies: out[2],
        isolated_count: out[3],
    })
}

fn graph_branch(p: &Rational) -> FamilyBranch {
    if *p < rational(1, 4) {
        FamilyBranch::Low
    } else {
        FamilyBranch::High
    }
}

/// Whether strict-mode derived counts are exact non-negative integers at
/// (n, p).
pub fn strict_graph_feasible(n: usize, p: &Rational) -> bool {
    n >= 1
        && p.is_positive()
        && *p <= Rational::one()
        && strict_graph_counts(n, p, graph_branch(p)).is_ok()
}

fn nearest_feasible_n(n: usize, p: &Rational) -> Option<usize> {
    let branch = graph_branch(p);
    for delta in 1..=2048usize {
        for cand in [n.checked_sub(delta), Some(n + delta)].into_iter().flatten() {
            if cand == 0 {
                continue;
            }
            if strict_graph_counts(cand, p, branch).is_ok() {
                return Some(cand);
            }
        }
    }
    None
}

/// Builds the graph-family instance (disjoint cliques, single edges and
/// isolated vertices realizing density p).
pub fn extremal_graph(
    n: usize,
    p: &Rational,
    mode: ExtremalMode,
) -> Result<(UniformHypergraph, ExtremalGraphSpec, ConstructionReport), Error> {
    if n == 0 {
        return Err(Error::InfeasibleParameters("n must be at least 1".into()));
    }
    if !p.is_positive() || *p > Rational::one() {
        return Err(Error::InfeasibleParameters(format!(
            "edge density must lie in (0, 1], got {p}"
        )));
    }
    let branch = graph_branch(p);
    let counts = match mode {
        ExtremalMode::Strict => strict_graph_counts(n, p, branch).map_err(|reason| {
            let suggestion = match nearest_feasible_n(n, p) {
                Some(n2) => format!("; nearest feasible vertex count at this density is n = {n2}"),
                None => "; no feasible vertex count found within +-2048".to_string(),
            };
            Error::InfeasibleParameters(format!("{reason}{suggestion}"))
        })?,
        ExtremalMode::Rounded => rounded_graph_counts(n, p, branch)?,
    };
    let mut parts = Vec::with_capacity(counts.clique_copies + 2);
    for _ in 0..counts.clique_copies {
        parts.push(clique(counts.clique_size, 2)?);
    }
    parts.push(matchings(counts.matching_copies)?);
    parts.push(isolated(counts.isolated_count, 2)?);
    let graph = disjoint_union(&parts)?;
    debug_assert_eq!(graph.vertex_count(), n);
    if mode == ExtremalMode::Strict {
        // Identity: copies*C(cs,2) + matchings = p*C(n,2) whenever the
        // counts are integral.
        debug_assert_eq!(
            rat_usize(graph.edge_count()),
            p * rat_int(binomial(n as i64, 2)?)
        );
    }
    let spec = ExtremalGraphSpec {
        n,
        branch,
        p: p.clone(),
        clique_size: counts.clique_size,
        clique_copies: counts.clique_copies,
        matching_copies: counts.matching_copies,
        isolated_count: counts.isolated_count,
    };
    let report = build_report(&graph, branch, true, None)?;
    Ok((graph, spec, report))
}

fn rounded_graph_counts(n: usize, p: &Rational, branch: FamilyBranch) -> Result<GraphCounts, Error> {
    let pf = p.to_f64().ok_or(Error::Overflow)?;
    let nf = n as f64;
    let (mut cs, mut copies) = match branch {
        FamilyBranch::Low => {
            let cs = (2.0 * pf * nf).round() as usize;
            let copies = (1.0 / (4.0 * pf)).round() as usize;
            (cs, copies)
        }
        FamilyBranch::High => ((pf.sqrt() * nf).round() as usize, 1),
    };
    if cs <= 1 {
        cs = 0;
        copies = 0;
    }
    if cs > 0 {
        copies = copies.min(n / cs);
    }
    let c_n2 = binomial(n as i64, 2)?;
    let m_target = to_usize(&(p * rat_int(c_n2)).round().to_integer(), "target edge count")?;
    let mut clique_edges = copies * (cs * cs.saturating_sub(1) / 2);
    while clique_edges > m_target {
        if copies > 1 {
            copies -= 1;
        } else if cs > 0 {
            cs -= 1;
        } else {
            break;
        }
        clique_edges = copies * (cs * cs.saturating_sub(1) / 2);
    }
    let capacity = (n - copies * cs) / 2;
    let matching_copies = (m_target - clique_edges).min(capacity);
    let isolated_count = n - copies * cs - 2 * matching_copies;
    Ok(GraphCounts {
        clique_size: cs,
        clique_copies: copies,
        matching_copies,
        isolated_count,
    })
}

/// Floor of an irrational expression, guarded by an exact predicate that
/// decides `c <= value`: the float candidate is nudged until
/// pred(c) && !pred(c+1).
fn floor_guarded(candidate: f64, pred: impl Fn(i128) -> bool) -> i128 {
    let mut c = candidate.floor() as i128;
    if c < 0 {
        c = 0;
    }
    let mut fuel = 64;
    while c > 0 && !pred(c) && fuel > 0 {
        c -= 1;
        fuel -= 1;
    }
    while pred(c + 1) && fuel > 0 {
        c += 1;
        fuel -= 1;
    }
    c
}

/// Default filler-cap multiplier.
pub fn default_cap_multiplier() -> Rational {
    rat_int(2)
}

/// Builds the k-uniform family instance: disjoint complete cliques plus a
/// degree-capped filler realizing m = round(p*C(n,k)) edges.
pub fn extremal_hypergraph(
    n: usize,
    k: usize,
    p: &Rational,
    cap_multiplier: &Rational,
) -> Result<(UniformHypergraph, ExtremalHypergraphSpec, ConstructionReport), Error> {
    if k < 2 {
        return Err(Error::UniformityTooSmall { k });
    }
    if n == 0 {
        return Err(Error::InfeasibleParameters("n must be at least 1".into()));
    }
    if !p.is_positive() || *p > Rational::one() {
        return Err(Error::InfeasibleParameters(format!(
            "edge density must lie in (0, 1], got {p}"
        )));
    }
    if !cap_multiplier.is_positive() {
        return Err(Error::InfeasibleParameters(
            "cap multiplier must be positive".into(),
        ));
    }
    let pf = p.to_f64().ok_or(Error::Overflow)?;
    let nf = n as f64;
    let threshold = Rational::new(BigInt::one(), BigInt::one() << k);
    let branch = if *p < threshold {
        FamilyBranch::Low
    } else {
        FamilyBranch::High
    };
    let n_rat = rat_usize(n);
    let (clique_size, clique_copies, cap_base, regime_ok) = match branch {
        FamilyBranch::Low => {
            let p1 = (2.0 * pf).powf(1.0 / (k as f64 - 1.0));
            // c <= (2p)^(1/(k-1)) * n  <=>  c^(k-1) <= 2p * n^(k-1)
            let cs = floor_guarded(p1 * nf, |c| {
                rat_pow(&rat_int(c), k - 1) <= rat_int(2) * p * rat_pow(&n_rat, k - 1)
            });
            // c <= 1/(2 p1)  <=>  (2c)^(k-1) * 2p <= 1
            let copies = floor_guarded(1.0 / (2.0 * p1), |c| {
                rat_pow(&rat_int(2 * c), k - 1) * rat_int(2) * p <= Rational::one()
            });
            let cap_base = p1.powi(k as i32) * nf.powi(k as i32 - 1);
            (cs, copies, cap_base, true)
        }
        FamilyBranch::High => {
            let p2 = pf.powf(1.0 / k as f64);
            // c <= p^(1/k) * n  <=>  c^k <= p * n^k
            let cs = floor_guarded(p2 * nf, |c| rat_pow(&rat_int(c), k) <= p * rat_pow(&n_rat, k));
            let cap_base = p2.powi(k as i32 - 1) * nf.powi(k as i32 - 2);
            let regime_ok = p2 <= (1.0 - nf.powf(-1.0 / k as f64)).powi(k as i32);
            (cs, 1, cap_base, regime_ok)
        }
    };
    let clique_size = clique_size as usize;
    let clique_copies = clique_copies as usize;
    if clique_copies
        .checked_mul(clique_size)
        .map(|used| used > n)
        .unwrap_or(true)
    {
        return Err(Error::InfeasibleParameters(format!(
            "{clique_copies} cliques of size {clique_size} do not fit in {n} vertices"
        )));
    }
    let per_clique = binomial(clique_size as i64, k as i64)?;
    let clique_edges = (clique_copies as i128)
        .checked_mul(per_clique)
        .ok_or(Error::Overflow)?;
    let total = binomial(n as i64, k as i64)?;
    let m_target = to_usize(
        &(p * rat_int(total)).round().to_integer(),
        "target edge count",
    )?;
    if (m_target as i128) < clique_edges {
        return Err(Error::InfeasibleParameters(format!(
            "the clique part carries {clique_edges} edges, above the target {m_target}; n is too small for this density"
        )));
    }
    let filler_target = m_target - clique_edges as usize;
    let filler_vertices = n - clique_copies * clique_size;
    if filler_target > 0 && filler_vertices < k {
        return Err(Error::InfeasibleParameters(format!(
            "{filler_target} filler edges needed but only {filler_vertices} vertices remain; density too close to the clique point"
        )));
    }
    let mult = cap_multiplier.to_f64().ok_or(Error::Overflow)?;
    let initial_cap = ((mult * cap_base).ceil() as usize).max(1);
    let mut cap = initial_cap;
    let mut retries = 0usize;
    let (filler_edges, realized_max_degree) = loop {
        match filler_bounded_degree(filler_vertices, k, filler_target, cap) {
            Ok(result) => break result,
            Err(err) => {
                if retries == 4 {
                    return Err(err);
                }
                retries += 1;
                cap *= 2;
            }
        }
    };

    let mut edges: Vec<Vec<u32>> = Vec::with_capacity(m_target);
    for copy in 0..clique_copies {
        let offset = (copy * clique_size) as u32;
        if clique_size >= k {
            let mut cur: Vec<u32> = (0..k as u32).collect();
            loop {
                edges.push(cur.iter().map(|&v| v + offset).collect());
                if !colex_next(&mut cur, clique_size) {
                    break;
                }
            }
        }
    }
    let filler_offset = (clique_copies * clique_size) as u32;
    for e in &filler_edges {
        edges.push(e.iter().map(|&v| v + filler_offset).collect());
    }
    let graph = UniformHypergraph::new(n, k, edges)?;
    debug_assert_eq!(graph.edge_count(), m_target);

    let spec = ExtremalHypergraphSpec {
        n,
        k,
        branch,
        p: p.clone(),
        clique_size,
        clique_copies,
        filler_target_edges: filler_target,
        filler_degree_cap: initial_cap,
    };
    let filler_report = FillerReport {
        target_edges: filler_target,
        vertex_count: filler_vertices,
        initial_cap,
        final_cap: cap,
        realized_max_degree,
        retries,
    };
    let report = build_report(&graph, branch, regime_ok, Some(filler_report))?;
    Ok((graph, spec, report))
}

fn build_report(
    graph: &UniformHypergraph,
    branch: FamilyBranch,
    regime_ok: bool,
    filler: Option<FillerReport>,
) -> Result<ConstructionReport, Error> {
    let n = graph.vertex_count();
    let k = graph.uniformity();
    let m = graph.edge_count();
    let total = binomial(n as i64, k as i64)?;
    let p = if total == 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::from(m), BigInt::from(total))
    };
    let fdb = first_deletion_bound(graph)?;
    let mut degree_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &d in graph.degrees() {
        *degree_counts.entry(d).or_insert(0) += 1;
    }
    let pf = p.to_f64().unwrap_or(0.0);
    let km1 = binomial(n as i64 - 1, k as i64 - 1)?;
    let (lower_expr_scaled, lower_expr_value) = if k == 2 {
        let value = pf.min(pf.sqrt() - pf) * (n as f64 - 1.0) - 1.0;
        let exact_min = if p <= rational(1, 4) {
            Some(p.clone())
        } else {
            sqrt_exact(&p).map(|sq| sq - &p)
        };
        let scaled = exact_min
            .map(|mn| (mn * rat_int(n as i128 - 1) - Rational::one()) * rat_int(total));
        (scaled, value)
    } else {
        let root = pf.powf((k as f64 - 1.0) / k as f64);
        let value = pf.min(root - pf) * km1 as f64;
        // min{p, p^((k-1)/k) - p} = p exactly when p <= 2^-k (the low
        // branch); that side is rational.
        let scaled = match branch {
            FamilyBranch::Low => Some(p.clone() * rat_int(km1) * rat_int(total)),
            FamilyBranch::High => None,
        };
        (scaled, value)
    };
    Ok(ConstructionReport {
        n,
        k,
        m,
        p,
        first_deletion_bound_scaled: fdb,
        lower_expr_scaled,
        lower_expr_value,
        degree_multiset: degree_counts.into_iter().collect(),
        branch,
        regime_ok,
        filler,
    })
}

/// Exact check of the graph-family guarantee: does the scaled value reach
/// (min{p, sqrt(p)-p}*(n-1) - 1) * C(n,2)?
///
/// When sqrt(p) is irrational the comparison is done by squaring: with
/// X = value + (p*(n-1)+1)*C(n,2) and Y = (n-1)*C(n,2), the claim is
/// X >= sqrt(p)*Y, i.e. X >= 0 and X^2 >= p*Y^2.
pub fn meets_graph_lower_expr(n: usize, p: &Rational, value_scaled: i128) -> Result<bool, Error> {
    let c = rat_int(binomial(n as i64, 2)?);
    let v = rat_int(value_scaled);
    let nm1 = rat_int(n as i128 - 1);
    if *p <= rational(1, 4) {
        let rhs = (p * &nm1 - Rational::one()) * &c;
        return Ok(v >= rhs);
    }
    if let Some(sq) = sqrt_exact(p) {
        let rhs = ((sq - p) * &nm1 - Rational::one()) * &c;
        return Ok(v >= rhs);
    }
    let x = &v + (p * &nm1 + Rational::one()) * &c;
    if x.is_negative() {
        return Ok(false);
    }
    let y = &nm1 * &c;
    Ok(&x * &x >= p * &y * &y)
}

/// A seeded random instance plus the provenance needed to reproduce it.
#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub hypergraph: UniformHypergraph,
    /// Generator algorithm identifier.
    pub generator: &'static str,
    pub seed: u64,
}

pub const RANDOM_GENERATOR_ID: &str = "chacha12-reject-v1";

/// m distinct uniformly random k-sets, drawn by rejection sampling of
/// sorted k-tuples from a seeded ChaCha12 stream.
pub fn random_uniform(
    n: usize,
    k: usize,
    m: usize,
    seed: u64,
) -> Result<GeneratedInstance, Error> {
    if k < 2 {
        return Err(Error::UniformityTooSmall { k });
    }
    let max_edges = binomial(n as i64, k as i64)?;
    if m as i128 > max_edges {
        return Err(Error::TooManyEdges { m, max_edges });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut chosen: std::collections::BTreeSet<Vec<u32>> = Default::default();
    let mut draw = Vec::with_capacity(k);
    while chosen.len() < m {
        draw.clear();
        while draw.len() < k {
            let v = rng.gen_range(0..n as u32);
            if !draw.contains(&v) {
                draw.push(v);
            }
        }
        draw.sort_unstable();
        if !chosen.contains(draw.as_slice()) {
            chosen.insert(draw.clone());
        }
    }
    let hypergraph = UniformHypergraph::new(n, k, chosen.into_iter().collect())?;
    Ok(GeneratedInstance {
        hypergraph,
        generator: RANDOM_GENERATOR_ID,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn building_blocks() {
        let g = disjoint_union(&[
            clique(4, 2).unwrap(),
            matchings(1).unwrap(),
            isolated(2, 2).unwrap(),
        ])
        .unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degrees(), &[3, 3, 3, 3, 1, 1, 0, 0]);

        let empty = disjoint_union(&[]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);

        assert_eq!(clique(5, 3).unwrap().edge_count(), 10);
        assert_eq!(clique(2, 3).unwrap().edge_count(), 0);

        let err = disjoint_union(&[clique(3, 2).unwrap(), clique(4, 3).unwrap()]).unwrap_err();
        assert!(matches!(err, Error::UniformityMismatch { .. }));
    }

    #[test]
    fn filler_hand_traces() {
        assert_eq!(
            filler_bounded_degree(8, 3, 0, 5).unwrap(),
            (Vec::new(), 0)
        );
        // Colex order 01, 02, 12, 03, ...: accepts 01, then everything
        // touching 0 or 1 is capped until 23.
        let (edges, maxd) = filler_bounded_degree(4, 2, 2, 1).unwrap();
        assert_eq!(edges, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(maxd, 1);
        assert!(matches!(
            filler_bounded_degree(3, 2, 3, 1),
            Err(Error::FillerInfeasible {
                target: 3,
                accepted: 1,
                cap: 1
            })
        ));
    }

    #[test]
    fn colex_order_is_by_largest_element() {
        let mut cur = vec![0u32, 1];
        let mut seen = vec![cur.clone()];
        while colex_next(&mut cur, 4) {
            seen.push(cur.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn strict_graph_quarter_density() {
        let p = rational(1, 4);
        let (g, spec, report) = extremal_graph(8, &p, ExtremalMode::Strict).unwrap();
        assert_eq!(spec.clique_size, 4);
        assert_eq!(spec.clique_copies, 1);
        assert_eq!(spec.matching_copies, 1);
        assert_eq!(spec.isolated_count, 2);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(report.first_deletion_bound_scaled, 21);
        // The lower expression min{p, sqrt(p)-p}(n-1) - 1 = 3/4 equals the
        // realized bound exactly.
        assert_eq!(report.lower_expr_scaled.unwrap(), rat_int(21));
        assert!(meets_graph_lower_expr(8, &p, 21).unwrap());
        assert!(!meets_graph_lower_expr(8, &p, 20).unwrap());
    }

    #[test]
    fn both_branches_coincide_at_quarter() {
        let p = rational(1, 4);
        let low = strict_graph_counts(8, &p, FamilyBranch::Low).unwrap();
        let high = strict_graph_counts(8, &p, FamilyBranch::High).unwrap();
        assert_eq!(low.clique_size, high.clique_size);
        assert_eq!(low.clique_copies, high.clique_copies);
        assert_eq!(low.matching_copies, high.matching_copies);
        assert_eq!(low.isolated_count, high.isolated_count);
    }

    #[test]
    fn strict_infeasible_with_suggestion() {
        // p = 1/16, n = 16: matching count (7/8*16)/4 = 3.5.
        let err = extremal_graph(16, &rational(1, 16), ExtremalMode::Strict).unwrap_err();
        match err {
            Error::InfeasibleParameters(msg) => {
                assert!(msg.contains("n = 32"), "message was: {msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(
            extremal_graph(10, &rational(1, 3), ExtremalMode::Strict),
            Err(Error::InfeasibleParameters(_))
        ));
    }

    #[test]
    fn strict_irrational_sqrt_rejected() {
        assert!(matches!(
            extremal_graph(8, &rational(1, 2), ExtremalMode::Strict),
            Err(Error::InfeasibleParameters(_))
        ));
    }

    #[test]
    fn rounded_mode_rebalances() {
        let p = rational(3, 10);
        let (g, _spec, report) = extremal_graph(10, &p, ExtremalMode::Rounded).unwrap();
        assert_eq!(g.vertex_count(), 10);
        // Target m = round(0.3 * 45) = 14; realized density reported.
        assert_eq!(g.edge_count(), report.m);
        assert!(report.m <= 14);
        assert_eq!(
            report.p,
            Rational::new(BigInt::from(report.m), BigInt::from(45))
        );
    }

    #[test]
    fn hypergraph_family_boundary_density() {
        // n=16, k=3, p=1/8 = 2^-k: both branch formulas give one copy of
        // K_8^(3) (56 edges); target 70, filler supplies 14 edges on 8
        // vertices. The boundary itself belongs to the high branch.
        let p = rational(1, 8);
        let (g, spec, report) =
            extremal_hypergraph(16, 3, &p, &default_cap_multiplier()).unwrap();
        assert_eq!(spec.branch, FamilyBranch::High);
        assert_eq!(spec.clique_size, 8);
        assert_eq!(spec.clique_copies, 1);
        assert_eq!(spec.filler_target_edges, 14);
        assert_eq!(g.edge_count(), 70);
        assert_eq!(g.vertex_count(), 16);
        let filler = report.filler.unwrap();
        assert_eq!(filler.target_edges, 14);
        assert_eq!(filler.vertex_count, 8);
        assert_eq!(filler.retries, 0);
        assert_eq!(report.p, rational(70, 560));
    }

    #[test]
    fn hypergraph_family_complete_point() {
        // p = 1: the clique is everything and the filler target is zero.
        let (g, spec, report) =
            extremal_hypergraph(7, 3, &Rational::one(), &default_cap_multiplier()).unwrap();
        assert_eq!(spec.clique_size, 7);
        assert_eq!(spec.filler_target_edges, 0);
        assert_eq!(g.edge_count(), 35);
        assert_eq!(report.filler.unwrap().realized_max_degree, 0);
    }

    #[test]
    fn hypergraph_family_density_near_one_rejected() {
        let p = rational(9999, 10000);
        assert!(matches!(
            extremal_hypergraph(100, 3, &p, &default_cap_multiplier()),
            Err(Error::InfeasibleParameters(_))
        ));
    }

    #[test]
    fn random_uniform_contracts() {
        let a = random_uniform(10, 2, 20, 42).unwrap();
        let b = random_uniform(10, 2, 20, 42).unwrap();
        assert_eq!(a.hypergraph, b.hypergraph);
        assert_eq!(a.generator, RANDOM_GENERATOR_ID);

        let empty = random_uniform(6, 3, 0, 7).unwrap();
        assert_eq!(empty.hypergraph.edge_count(), 0);

        let complete = random_uniform(6, 2, 15, 99).unwrap();
        assert_eq!(complete.hypergraph, clique(6, 2).unwrap());

        assert!(matches!(
            random_uniform(4, 2, 7, 1),
            Err(Error::TooManyEdges { m: 7, .. })
        ));
    }

    #[test]
    fn sqrt_exact_cases() {
        assert_eq!(sqrt_exact(&rational(9, 25)).unwrap(), rational(3, 5));
        assert_eq!(sqrt_exact(&rational(1, 4)).unwrap(), rational(1, 2));
        assert!(sqrt_exact(&rational(1, 2)).is_none());
        assert!(sqrt_exact(&rational(-1, 4)).is_none());
    }
}
