//! Middle homology `H_{n-1}(L_f, Z)` of a link from its weights and degree.
//!
//! The free rank comes from the Milnor-Orlik alternating sum over subsets of
//! the variables; the torsion from Orlik's `c`/`k` subset recursion. Subsets
//! of `{0..n}` are bit masks; every quantity is kept exact.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::LinkDescriptor;

/// Sweeps materialize all `2^{n+1}` subsets; `n ≤ 20` by default.
pub const DEFAULT_MAX_VARIABLES: usize = 21;

/// Per-subset values of the torsion recursion, indexed by bit mask.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetTable {
    variables: usize,
    c: Vec<BigUint>,
    kappa: Vec<BigRational>,
    k: Vec<BigRational>,
}

impl SubsetTable {
    pub fn build(link: &LinkDescriptor) -> Result<Self> {
        Self::with_limit(link, DEFAULT_MAX_VARIABLES)
    }

    pub fn with_limit(link: &LinkDescriptor, max_variables: usize) -> Result<Self> {
        check_limit(link, max_variables)?;
        let c = c_coefficients(link)?;
        let (kappa, k) = k_values(link);
        Ok(SubsetTable {
            variables: link.variables(),
            c,
            kappa,
            k,
        })
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn full_mask(&self) -> usize {
        (1 << self.variables) - 1
    }

    pub fn c(&self, mask: usize) -> &BigUint {
        &self.c[mask]
    }

    pub fn kappa(&self, mask: usize) -> &BigRational {
        &self.kappa[mask]
    }

    pub fn k(&self, mask: usize) -> &BigRational {
        &self.k[mask]
    }

    /// Torsion coefficients `d_1, d_2, …` with unit entries dropped.
    pub fn torsion(&self) -> Vec<BigUint> {
        let full = self.full_mask();
        let max_k = self
            .k
            .iter()
            .max()
            .cloned()
            .unwrap_or_else(BigRational::zero);
        let r = max_k.floor().to_integer().to_u64().unwrap_or(0);
        (1..=r)
            .map(|j| {
                let j = BigRational::from_integer(BigInt::from(j));
                (0..full)
                    .filter(|&mask| self.k[mask] >= j)
                    .map(|mask| &self.c[mask])
                    .product::<BigUint>()
            })
            .filter(|d| !d.is_one())
            .collect()
    }
}

fn check_limit(link: &LinkDescriptor, max_variables: usize) -> Result<()> {
    if link.variables() > max_variables || link.variables() >= usize::BITS as usize {
        return Err(Error::TooManyVariables {
            variables: link.variables(),
            limit: max_variables,
        });
    }
    Ok(())
}

/// `Π u / (Π v · lcm u)` over the indices of each mask; `1` for the empty mask.
fn subset_terms(link: &LinkDescriptor) -> Vec<BigRational> {
    let size = 1usize << link.variables();
    let mut prod_u = vec![BigUint::one(); size];
    let mut prod_v = vec![BigUint::one(); size];
    let mut lcm_u = vec![BigUint::one(); size];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let u = BigUint::from(link.u()[low]);
        prod_u[mask] = &prod_u[rest] * &u;
        prod_v[mask] = &prod_v[rest] * link.v()[low];
        lcm_u[mask] = lcm_u[rest].lcm(&u);
    }
    (0..size)
        .map(|mask| {
            // lcm divides the product, so the numerator is integral
            let numer = &prod_u[mask] / &lcm_u[mask];
            BigRational::new(numer.into(), prod_v[mask].clone().into())
        })
        .collect()
}

fn sign(odd: bool) -> BigRational {
    if odd {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

/// Middle Betti number `b_{n-1}` by the Milnor-Orlik subset sum.
pub fn betti(link: &LinkDescriptor) -> Result<BigUint> {
    check_limit(link, DEFAULT_MAX_VARIABLES)?;
    let n = link.n();
    let sum: BigRational = subset_terms(link)
        .into_iter()
        .enumerate()
        .map(|(mask, term)| sign((n + 1 - mask.count_ones() as usize) % 2 == 1) * term)
        .sum();
    if !sum.is_integer() || sum.is_negative() {
        return Err(Error::NonIntegerBetti(sum.to_string()));
    }
    Ok(sum.to_integer().magnitude().clone())
}

fn c_coefficients(link: &LinkDescriptor) -> Result<Vec<BigUint>> {
    let variables = link.variables();
    let full = (1usize << variables) - 1;
    let u = link.u();
    // gcd of the u_j left out of each mask; the full mask has none
    let mut c: Vec<BigRational> = (0..=full)
        .map(|mask| {
            let g = (0..variables)
                .filter(|j| mask & (1 << j) == 0)
                .fold(0u64, |g, j| g.gcd(&u[j]));
            BigRational::from_integer(BigInt::from(g.max(1)))
        })
        .collect();
    // Multiplicative Möbius inversion over the subset lattice. Since
    // Π_{J⊆S} c(J) = gcd(u_j : j ∉ S), this leaves c(S) = gcd / Π_{J⊊S} c(J).
    for bit in 0..variables {
        for mask in 0..=full {
            if mask & (1 << bit) != 0 {
                let below = c[mask ^ (1 << bit)].clone();
                c[mask] /= below;
            }
        }
    }
    c[full] = BigRational::one();
    let mut order: Vec<usize> = (0..full).collect();
    order.sort_by_key(|&m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
    if let Some(&bad) = order.iter().find(|&&m| !c[m].is_integer()) {
        return Err(Error::InexactDivision {
            subset: bad as u64,
            value: c[bad].to_string(),
        });
    }
    Ok(c.into_iter()
        .map(|q| q.to_integer().magnitude().clone())
        .collect())
}

/// `κ(S) = Σ_{T⊆S} (−1)^{|S|−|T|} term(T)` and the parity-filtered `k(S)`.
fn k_values(link: &LinkDescriptor) -> (Vec<BigRational>, Vec<BigRational>) {
    let variables = link.variables();
    let n = link.n();
    let mut kappa = subset_terms(link);
    for bit in 0..variables {
        for mask in 0..kappa.len() {
            if mask & (1 << bit) != 0 {
                let below = kappa[mask ^ (1 << bit)].clone();
                kappa[mask] -= below;
            }
        }
    }
    let k = kappa
        .iter()
        .enumerate()
        .map(|(mask, kap)| {
            let s = mask.count_ones() as usize;
            if (n + 1 - s) % 2 == 1 {
                kap.clone()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    (kappa, k)
}

/// The `c(S)` coefficients indexed by mask; the full set carries 1.
pub fn orlik_c_coefficients(link: &LinkDescriptor) -> Result<Vec<BigUint>> {
    check_limit(link, DEFAULT_MAX_VARIABLES)?;
    c_coefficients(link)
}

/// `(κ(S), k(S))` indexed by mask.
pub fn orlik_k_values(link: &LinkDescriptor) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    check_limit(link, DEFAULT_MAX_VARIABLES)?;
    Ok(k_values(link))
}

pub fn orlik_torsion(link: &LinkDescriptor) -> Result<Vec<BigUint>> {
    Ok(SubsetTable::build(link)?.torsion())
}

/// Betti number and torsion coefficients of `H_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    #[serde(with = "crate::bignum")]
    pub betti: BigUint,
    #[serde(with = "crate::bignum::list")]
    pub torsion: Vec<BigUint>,
    pub label: String,
}

impl HomologyResult {
    pub fn new(betti: BigUint, torsion: Vec<BigUint>) -> Self {
        let label = group_label(&betti, &torsion);
        HomologyResult {
            betti,
            torsion,
            label,
        }
    }

    /// Torsion coefficients as a sorted multiset, for order-free comparison.
    pub fn torsion_multiset(&self) -> Vec<BigUint> {
        let mut t = self.torsion.clone();
        t.sort();
        t
    }

    pub fn is_divisibility_chain(&self) -> bool {
        self.torsion
            .windows(2)
            .all(|p| !p[1].is_zero() && (&p[0] % &p[1]).is_zero())
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

pub fn homology_summary(link: &LinkDescriptor) -> Result<HomologyResult> {
    let b = betti(link)?;
    let torsion = orlik_torsion(link)?;
    Ok(HomologyResult::new(b, torsion))
}

/// `Z^b ⊕ Z/d_1 ⊕ …`, with runs of equal factors written `(Z/d)^m`.
pub fn group_label(betti: &BigUint, torsion: &[BigUint]) -> String {
    let mut parts = Vec::new();
    if betti.is_one() {
        parts.push("Z".to_string());
    } else if !betti.is_zero() {
        parts.push(format!("Z^{betti}"));
    }
    let mut i = 0;
    while i < torsion.len() {
        let run = torsion[i..].iter().take_while(|&d| d == &torsion[i]).count();
        parts.push(match run {
            1 => format!("Z/{}", torsion[i]),
            m => format!("(Z/{})^{}", torsion[i], m),
        });
        i += run;
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ⊕ ")
    }
}
