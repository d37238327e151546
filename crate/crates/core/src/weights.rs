//! Weight vectors, degrees and the two polynomial shapes whose links the
//! homology engine is known to describe exactly.
//!
//! A weighted homogeneous polynomial of degree `d` in variables `z_0..z_n`
//! with weights `w_0..w_n` satisfies `f(λ^w_0 z_0, …) = λ^d f(z)`. Everything
//! downstream only needs the weights, the degree and the reduced pairs
//! `u_i = d / gcd(d, w_i)`, `v_i = w_i / gcd(d, w_i)`.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weights of a `C*` action on `C^{n+1}`: positive, primitive, at least two.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The dimension parameter: the link is a `(2n-1)`-manifold.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sum(&self) -> u64 {
        // Construction guarantees the sum fits.
        self.0.iter().sum()
    }

    pub fn is_ascending(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }

    /// Weights reordered so that position `i` holds `self[ordering[i]]`.
    pub fn permuted(&self, ordering: &[usize]) -> Vec<u64> {
        ordering.iter().map(|&i| self.0[i]).collect()
    }
}

impl TryFrom<Vec<u64>> for WeightVector {
    type Error = Error;

    fn try_from(raw: Vec<u64>) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::TooFewWeights(raw.len()));
        }
        if let Some(index) = raw.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveWeight { index, value: 0 });
        }
        raw.iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .ok_or(Error::WeightOverflow)?;
        let gcd = raw.iter().fold(0u64, |g, &w| g.gcd(&w));
        if gcd != 1 {
            return Err(Error::NonPrimitive { gcd });
        }
        Ok(WeightVector(raw))
    }
}

impl From<WeightVector> for Vec<u64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Check raw integers and build a [`WeightVector`]; order is preserved.
pub fn validate_weights(raw: &[i64]) -> Result<WeightVector> {
    if raw.len() < 2 {
        return Err(Error::TooFewWeights(raw.len()));
    }
    let mut weights = Vec::with_capacity(raw.len());
    for (index, &value) in raw.iter().enumerate() {
        if value <= 0 {
            return Err(Error::NonPositiveWeight { index, value });
        }
        weights.push(value as u64);
    }
    WeightVector::try_from(weights)
}

/// Weights together with a degree and the derived `u_i`, `v_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDescriptor {
    weights: WeightVector,
    degree: u64,
    u: Vec<u64>,
    v: Vec<u64>,
}

impl LinkDescriptor {
    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// `u_i = d / gcd(d, w_i)`
    pub fn u(&self) -> &[u64] {
        &self.u
    }

    /// `v_i = w_i / gcd(d, w_i)`
    pub fn v(&self) -> &[u64] {
        &self.v
    }

    pub fn n(&self) -> usize {
        self.weights.n()
    }

    pub fn variables(&self) -> usize {
        self.weights.len()
    }
}

pub fn link_descriptor(weights: &WeightVector, degree: u64) -> Result<LinkDescriptor> {
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    if let Some((index, &weight)) = weights.0.iter().find_position(|&&w| w >= degree) {
        return Err(Error::WeightExceedsDegree {
            index,
            weight,
            degree,
        });
    }
    let (u, v) = weights
        .0
        .iter()
        .map(|&w| {
            let g = degree.gcd(&w);
            (degree / g, w / g)
        })
        .unzip();
    Ok(LinkDescriptor {
        weights: weights.clone(),
        degree,
        u,
        v,
    })
}

/// Degree of an anticanonically embedded Fano hypersurface: `Σ w_i − 1`.
pub fn fano_degree(weights: &WeightVector) -> u64 {
    weights.sum() - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormVariant {
    /// `z_0^a_0 + z_1^a_1 + … + z_n^a_n`
    BrieskornPham,
    /// `z_0^a_0 + z_0 z_1^a_1 + … + z_{n-1} z_n^a_n`
    OrlikChain,
}

/// Exponent data of a polynomial realizing a weight/degree pair.
///
/// `ordering[i]` is the index (into the original weight vector) of the
/// variable sitting at chain position `i`. Brieskorn-Pham forms always carry
/// the identity ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolynomialForm {
    pub variant: FormVariant,
    pub exponents: Vec<u64>,
    pub ordering: Vec<usize>,
}

impl PolynomialForm {
    /// Set when some chain exponent equals 1. The corresponding monomial
    /// `z_{i-1} z_i` is formally fine but smoothness of the link is not checked.
    pub fn has_unit_exponent(&self) -> bool {
        self.exponents.contains(&1)
    }

    /// Re-check the defining identities against `weights` and `degree`.
    pub fn satisfies(&self, weights: &WeightVector, degree: u64) -> bool {
        let n = weights.len();
        if self.exponents.len() != n || self.ordering.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &i in &self.ordering {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
        let w = weights.permuted(&self.ordering);
        let d = degree as u128;
        let a = &self.exponents;
        match self.variant {
            FormVariant::BrieskornPham => {
                self.ordering.iter().enumerate().all(|(p, &i)| p == i)
                    && a.iter().zip(&w).all(|(&a, &w)| a >= 2 && a as u128 * w as u128 == d)
            }
            FormVariant::OrlikChain => {
                a.iter().all(|&a| a >= 1)
                    && a[0] as u128 * w[0] as u128 == d
                    && (1..n).all(|i| w[i - 1] as u128 + a[i] as u128 * w[i] as u128 == d)
            }
        }
    }

    /// The weights in the order the constraints hold.
    pub fn ordered_weights(&self, weights: &WeightVector) -> Vec<u64> {
        weights.permuted(&self.ordering)
    }

    /// Render the polynomial, naming variables by their original index.
    pub fn polynomial(&self) -> String {
        let var = |p: usize| format!("z{}", self.ordering[p]);
        let power = |p: usize| match self.exponents[p] {
            1 => var(p),
            a => format!("{}^{}", var(p), a),
        };
        (0..self.exponents.len())
            .map(|p| match (self.variant, p) {
                (FormVariant::OrlikChain, p) if p > 0 => format!("{}*{}", var(p - 1), power(p)),
                _ => power(p),
            })
            .join(" + ")
    }
}

/// Brieskorn-Pham exponents `a_i = d / w_i`, when all are integers `≥ 2`.
pub fn bp_exponents(weights: &WeightVector, degree: u64) -> Option<PolynomialForm> {
    let exponents = weights
        .0
        .iter()
        .map(|&w| (degree.is_multiple_of(w) && degree / w >= 2).then_some(degree / w))
        .collect::<Option<Vec<_>>>()?;
    Some(PolynomialForm {
        variant: FormVariant::BrieskornPham,
        exponents,
        ordering: (0..weights.len()).collect(),
    })
}

/// Chain exponents for the weights in the order given:
/// `a_0 w_0 = d` and `w_{i-1} + a_i w_i = d`.
pub fn chain_exponents(weights: &WeightVector, degree: u64) -> Option<PolynomialForm> {
    let ordering: Vec<usize> = (0..weights.len()).collect();
    chain_for_order(weights, degree, ordering)
}

fn chain_for_order(
    weights: &WeightVector,
    degree: u64,
    ordering: Vec<usize>,
) -> Option<PolynomialForm> {
    let w = weights.permuted(&ordering);
    let mut exponents = Vec::with_capacity(w.len());
    for (i, &wi) in w.iter().enumerate() {
        let target = if i == 0 {
            degree
        } else {
            degree.checked_sub(w[i - 1])?
        };
        if target == 0 || target % wi != 0 {
            return None;
        }
        exponents.push(target / wi);
    }
    Some(PolynomialForm {
        variant: FormVariant::OrlikChain,
        exponents,
        ordering,
    })
}

/// Every variable order admitting chain exponents, by lexicographic index
/// permutation. Orders that only swap equal weights are reported once.
pub fn find_chain_orderings(weights: &WeightVector, degree: u64) -> Vec<PolynomialForm> {
    let n = weights.len();
    let mut seen = std::collections::HashSet::new();
    (0..n)
        .permutations(n)
        .filter(|ordering| seen.insert(weights.permuted(ordering)))
        .filter_map(|ordering| chain_for_order(weights, degree, ordering))
        .collect()
}

/// `Π (a_i − 1)` for a Brieskorn-Pham form.
pub fn milnor_number(form: &PolynomialForm) -> Result<BigUint> {
    if form.variant != FormVariant::BrieskornPham {
        return Err(Error::WrongVariant);
    }
    Ok(form
        .exponents
        .iter()
        .map(|&a| BigUint::from(a.saturating_sub(1)))
        .product())
}
