//! Exact binomial coefficients in checked 128-bit arithmetic.

use crate::error::Error;

/// C(a, r), with C(a, r) = 0 when r > a, r < 0 or a < 0.
///
/// Uses the multiplicative formula; every intermediate is checked, so an
/// out-of-width result is reported as `Overflow` rather than wrapped.
pub fn binomial(a: i64, r: i64) -> Result<i128, Error> {
    if r < 0 || a < 0 || r > a {
        return Ok(0);
    }
    let r = r.min(a - r) as i128;
    let a = a as i128;
    let mut acc: i128 = 1;
    for i in 0..r {
        // acc * (a - i) is divisible by (i + 1): acc is C(a, i) here.
        acc = acc.checked_mul(a - i).ok_or(Error::Overflow)? / (i + 1);
    }
    Ok(acc)
}

/// Columns C(i, k) and C(i, k-1) for i = 0..=n, built by Pascal's rule so
/// every entry is exact and overflow-checked once at construction.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    choose_k: Vec<i128>,
    choose_km1: Vec<i128>,
}

impl BinomialTable {
    pub fn new(n: usize, k: usize) -> Result<Self, Error> {
        assert!(k >= 1, "table requires k >= 1");
        let mut row = vec![0i128; k + 1];
        row[0] = 1;
        let mut choose_k = Vec::with_capacity(n + 1);
        let mut choose_km1 = Vec::with_capacity(n + 1);
        choose_k.push(row[k]);
        choose_km1.push(row[k - 1]);
        for _ in 1..=n {
            for j in (1..=k).rev() {
                row[j] = row[j].checked_add(row[j - 1]).ok_or(Error::Overflow)?;
            }
            choose_k.push(row[k]);
            choose_km1.push(row[k - 1]);
        }
        Ok(Self {
            choose_k,
            choose_km1,
        })
    }

    /// C(i, k).
    pub fn choose_k(&self, i: usize) -> i128 {
        self.choose_k[i]
    }

    /// C(i, k-1).
    pub fn choose_km1(&self, i: usize) -> i128 {
        self.choose_km1[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(8, 2).unwrap(), 28);
        assert_eq!(binomial(1, 2).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(-1, 2).unwrap(), 0);
        assert_eq!(binomial(5, -1).unwrap(), 0);
    }

    #[test]
    fn cross_check_against_pascal() {
        // Independent route: full Pascal triangle.
        let mut rows: Vec<Vec<i128>> = vec![vec![1]];
        for i in 1..=45 {
            let prev = &rows[i - 1];
            let mut row = vec![1i128; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        assert_eq!(rows[40][5], 658008);
        assert_eq!(binomial(40, 5).unwrap(), 658008);
        for a in 0..=45 {
            for r in 0..=a {
                assert_eq!(binomial(a as i64, r as i64).unwrap(), rows[a][r]);
            }
        }
    }

    #[test]
    fn overflow_reported() {
        assert_eq!(binomial(1000, 500), Err(Error::Overflow));
    }

    #[test]
    fn table_matches_direct() {
        for k in 1..=5usize {
            let t = BinomialTable::new(30, k).unwrap();
            for i in 0..=30usize {
                assert_eq!(t.choose_k(i), binomial(i as i64, k as i64).unwrap());
                assert_eq!(t.choose_km1(i), binomial(i as i64, k as i64 - 1).unwrap());
            }
        }
    }
}
