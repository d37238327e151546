//! Brute-force cross-check for Brieskorn-Pham links.
//!
//! The Milnor fiber of `z_0^a_0 + … + z_n^a_n` has middle homology
//! `⊗ Z[t]/(1 + t + … + t^{a_i−1})` with the monodromy acting as
//! multiplication by `t` in every factor, and for `n ≥ 2` the link satisfies
//! `H_{n−1}(L) ≅ coker(I − h_*)`. Building that matrix explicitly and taking
//! its Smith normal form gives homology without touching the subset formulas.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::homology::HomologyResult;
use crate::weights::{link_descriptor, LinkDescriptor, WeightVector};

/// Largest Milnor number for which the monodromy matrix is built.
pub const DEFAULT_MATRIX_CAP: u64 = 4096;
/// Largest Milnor number used by equivalence sweeps.
pub const DEFAULT_SWEEP_CAP: u64 = 1000;

fn check_exponents(a: &[u64]) -> Result<u128> {
    if a.is_empty() {
        return Err(Error::InvalidExponents("empty exponent list".into()));
    }
    if let Some(bad) = a.iter().find(|&&x| x < 2) {
        return Err(Error::InvalidExponents(format!(
            "exponent {bad} is below 2"
        )));
    }
    a.iter()
        .try_fold(1u128, |acc, &x| acc.checked_mul(x as u128 - 1))
        .ok_or(Error::CapExceeded {
            size: u128::MAX,
            cap: 0,
        })
}

fn check_cap(a: &[u64], cap: u64) -> Result<u64> {
    let mu = check_exponents(a).map_err(|e| match e {
        Error::CapExceeded { size, .. } => Error::CapExceeded { size, cap },
        e => e,
    })?;
    if mu > cap as u128 {
        return Err(Error::CapExceeded { size: mu, cap });
    }
    Ok(mu as u64)
}

/// Number of tuples `1 ≤ j_i ≤ a_i − 1` with `Σ j_i / a_i` an integer: the
/// multiplicity of the eigenvalue 1 of the monodromy.
pub fn eigen1_count(a: &[u64], cap: u64) -> Result<u64> {
    check_cap(a, cap)?;
    let lcm = a
        .iter()
        .try_fold(1u128, |l, &x| {
            let g = l.gcd(&(x as u128));
            (l / g).checked_mul(x as u128)
        })
        .ok_or(Error::CapExceeded {
            size: u128::MAX,
            cap,
        })?;
    let step: Vec<u128> = a.iter().map(|&x| lcm / x as u128).collect();
    // odometer over the tuple, tracking Σ j_i·(L/a_i) mod L
    let mut j: Vec<u64> = vec![1; a.len()];
    let mut acc: u128 = step.iter().sum::<u128>() % lcm;
    let mut count = 0u64;
    loop {
        if acc == 0 {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == a.len() {
                return Ok(count);
            }
            if j[i] + 1 < a[i] {
                j[i] += 1;
                acc = (acc + step[i]) % lcm;
                break;
            }
            // roll back from a_i − 1 to 1
            let back = (step[i] * (a[i] as u128 - 2)) % lcm;
            acc = (acc + lcm - back) % lcm;
            j[i] = 1;
            i += 1;
        }
    }
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Checked product; `None` on overflow.
    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cell = &mut out.data[i * other.cols + j];
                        *cell = cell.checked_add(a.checked_mul(b)?)?;
                    }
                }
            }
        }
        Some(out)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == i64::from(i == j)))
    }

    /// `I − self` for a square matrix.
    pub fn identity_minus(&self) -> IntMatrix {
        assert_eq!(self.rows, self.cols);
        let mut out = self.clone();
        for (idx, v) in out.data.iter_mut().enumerate() {
            let diag = idx / self.cols == idx % self.cols;
            *v = i64::from(diag) - *v;
        }
        out
    }
}

/// Companion matrix of `1 + t + … + t^{a−1}`: multiplication by `t` on the
/// basis `1, t, …, t^{a−2}`.
pub fn companion_block(a: u64) -> IntMatrix {
    let m = (a - 1) as usize;
    let mut c = IntMatrix::zeros(m, m);
    for i in 1..m {
        c.set(i, i - 1, 1);
    }
    for i in 0..m {
        c.set(i, m - 1, -1);
    }
    c
}

/// Monodromy on the Pham basis, kept as its Kronecker factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyMatrix {
    exponents: Vec<u64>,
    blocks: Vec<IntMatrix>,
    size: usize,
}

impl MonodromyMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn blocks(&self) -> &[IntMatrix] {
        &self.blocks
    }

    /// `lcm(a_i)`, a multiple of the order of the monodromy.
    pub fn period(&self) -> u64 {
        self.exponents.iter().fold(1u64, |l, &a| l.lcm(&a))
    }

    pub fn dense(&self) -> IntMatrix {
        self.blocks
            .iter()
            .fold(IntMatrix::identity(1), |acc, b| acc.kron(b))
    }

    /// Whether `h^power = I`, by repeated sparse-times-dense products.
    pub fn power_is_identity(&self, power: u64) -> bool {
        let h = self.dense();
        let n = self.size;
        let nonzero: Vec<Vec<(usize, i64)>> = (0..n)
            .map(|i| {
                (0..n)
                    .filter_map(|k| Some((k, h.get(i, k))).filter(|&(_, v)| v != 0))
                    .collect()
            })
            .collect();
        let mut acc = IntMatrix::identity(n);
        for _ in 0..power {
            let mut next = IntMatrix::zeros(n, n);
            for (i, row) in nonzero.iter().enumerate() {
                let out = &mut next.data[i * n..(i + 1) * n];
                for &(k, a) in row {
                    let src = &acc.data[k * n..(k + 1) * n];
                    for (o, &b) in out.iter_mut().zip(src) {
                        match b.checked_mul(a).and_then(|p| o.checked_add(p)) {
                            Some(v) => *o = v,
                            None => return false,
                        }
                    }
                }
            }
            acc = next;
        }
        acc.is_identity()
    }
}

pub fn pham_monodromy(a: &[u64], cap: u64) -> Result<MonodromyMatrix> {
    let mu = check_cap(a, cap)?;
    Ok(MonodromyMatrix {
        exponents: a.to_vec(),
        blocks: a.iter().map(|&x| companion_block(x)).collect(),
        size: mu as usize,
    })
}

/// Invariant factors `s_1 | s_2 | …`; zeros (free rank) come last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigUint>,
}

impl SnfResult {
    pub fn rank_deficiency(&self) -> usize {
        self.invariant_factors.iter().filter(|s| s.is_zero()).count()
    }

    /// Factors other than 0 and 1, largest first.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.invariant_factors
            .iter()
            .filter(|s| !s.is_zero() && !s.is_one())
            .rev()
            .cloned()
            .collect()
    }
}

/// Entry type the elimination runs over. The `i64` instance reports
/// overflow so the caller can restart over `BigInt`.
trait Entry: Clone + Zero {
    fn magnitude_cmp(&self, other: &Self) -> Ordering;
    fn is_unit(&self) -> bool;
    fn quotient(&self, pivot: &Self) -> Self;
    /// `self − q·x`
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Entry for i64 {
    fn magnitude_cmp(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn quotient(&self, pivot: &Self) -> Self {
        self.div_euclid(*pivot)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn magnitude_cmp(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn quotient(&self, pivot: &Self) -> Self {
        // Euclidean: remainder in [0, |pivot|)
        let (q, r) = self.div_mod_floor(pivot);
        if pivot.is_negative() && !r.is_zero() {
            q + 1
        } else {
            q
        }
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Diagonalize by unimodular row and column operations, always pivoting on
/// the smallest nonzero magnitude. Returns the diagonal, or `None` on overflow.
fn diagonalize<T: Entry>(mut a: Vec<Vec<T>>, cols: usize) -> Option<Vec<T>> {
    let rows = a.len();
    let steps = rows.min(cols);
    let mut diag = Vec::with_capacity(steps);
    for t in 0..steps {
        // global minimum over the trailing block
        let mut best: Option<(usize, usize)> = None;
        'search: for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if x.is_zero() {
                    continue;
                }
                let better = best.is_none_or(|(bi, bj)| {
                    x.magnitude_cmp(&a[bi][bj]) == Ordering::Less
                });
                if better {
                    best = Some((i, j));
                    if x.is_unit() {
                        break 'search;
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        swap_to(&mut a, t, bi, bj);
        loop {
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].quotient(&pivot);
                let (head, tail) = a.split_at_mut(i);
                let src = &head[t];
                for (x, p) in tail[0][t..].iter_mut().zip(&src[t..]) {
                    *x = x.sub_mul(&q, p)?;
                }
                clean &= tail[0][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].quotient(&pivot);
                for row in a[t..].iter_mut() {
                    let p = row[t].clone();
                    row[j] = row[j].sub_mul(&q, &p)?;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            // a remainder smaller than the pivot sits in row or column t
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].magnitude_cmp(&a[best.0][best.1]) == Ordering::Less {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].magnitude_cmp(&a[best.0][best.1]) == Ordering::Less {
                    best = (t, j);
                }
            }
            swap_to(&mut a, t, best.0, best.1);
        }
        diag.push(a[t][t].clone());
    }
    diag.resize(steps, T::zero());
    Some(diag)
}

fn swap_to<T>(a: &mut [Vec<T>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    if j != t {
        for row in a.iter_mut() {
            row.swap(t, j);
        }
    }
}

/// Turn any diagonal into invariant factors via `(x, y) ↦ (gcd, lcm)`.
fn normalize(diag: Vec<BigInt>) -> Vec<BigUint> {
    let mut d: Vec<BigUint> = diag.into_iter().map(|x| x.magnitude().clone()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if d[i].is_one() {
                break;
            }
            let g = d[i].gcd(&d[j]);
            if g != d[i] {
                let l = if g.is_zero() {
                    BigUint::zero()
                } else {
                    &d[i] / &g * &d[j]
                };
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let cols = m.cols();
    let diag = match diagonalize(m.to_rows(), cols) {
        Some(d) => d.iter().map(Entry::to_big).collect(),
        None => {
            let wide = m
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            diagonalize::<BigInt>(wide, cols).expect("BigInt elimination cannot overflow")
        }
    };
    SnfResult {
        invariant_factors: normalize(diag),
    }
}

/// Primitive weights and degree induced by a BP exponent list: `d = lcm(a)`,
/// `w_i = d / a_i`, both divided by the common gcd.
pub fn bp_link(a: &[u64]) -> Result<LinkDescriptor> {
    check_exponents(a)?;
    let d = a
        .iter()
        .try_fold(1u64, |l, &x| (l / l.gcd(&x)).checked_mul(x))
        .ok_or(Error::WeightOverflow)?;
    let raw: Vec<u64> = a.iter().map(|&x| d / x).collect();
    let g = raw.iter().fold(0u64, |g, &w| g.gcd(&w));
    let weights = WeightVector::try_from(raw.iter().map(|&w| w / g).collect::<Vec<_>>())?;
    link_descriptor(&weights, d / g)
}

/// `H_{n−1}` of the Brieskorn-Pham link from `coker(I − h_*)`.
pub fn oracle_homology(a: &[u64], cap: u64) -> Result<HomologyResult> {
    if a.len() < 3 {
        return Err(Error::InvalidExponents(
            "the cokernel description needs at least 3 variables".into(),
        ));
    }
    let h = pham_monodromy(a, cap)?;
    let snf = smith_normal_form(&h.dense().identity_minus());
    Ok(HomologyResult::new(
        BigUint::from(snf.rank_deficiency()),
        snf.torsion(),
    ))
}

/// Oracle, eigenvalue count and subset algorithm side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub exponents: Vec<u64>,
    pub oracle: HomologyResult,
    pub eigen1: u64,
    pub algorithm: HomologyResult,
}

impl OracleComparison {
    pub fn matches(&self) -> bool {
        self.oracle.betti == self.algorithm.betti
            && self.oracle.betti.to_u64() == Some(self.eigen1)
            && self.oracle.torsion_multiset() == self.algorithm.torsion_multiset()
    }
}

pub fn compare_with_algorithm(a: &[u64], cap: u64) -> Result<OracleComparison> {
    let oracle = oracle_homology(a, cap)?;
    let eigen1 = eigen1_count(a, cap)?;
    let algorithm = crate::homology::homology_summary(&bp_link(a)?)?;
    Ok(OracleComparison {
        exponents: a.to_vec(),
        oracle,
        eigen1,
        algorithm,
    })
}
