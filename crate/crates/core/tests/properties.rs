use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use link_homology::catalog::{
    emit_report, parse_catalog, parse_report_csv, parse_report_json, scan, CatalogEntry,
    ReportFormat, ScanOptions,
};
use link_homology::homology::{betti, homology_summary, SubsetTable};
use link_homology::oracle::{bp_link, oracle_homology, smith_normal_form, IntMatrix};
use link_homology::weights::{
    bp_exponents, chain_exponents, find_chain_orderings, link_descriptor, LinkDescriptor,
    WeightVector,
};

/// Weights and degree of the chain polynomial with the given exponents:
/// `w_0 = d/a_0`, `w_i = (d − w_{i−1})/a_i`, scaled to integers and made
/// primitive.
fn chain_link(a: &[u64]) -> Option<LinkDescriptor> {
    // track w_i / d as a reduced fraction
    let mut fracs: Vec<(u128, u128)> = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        let (num, den) = if i == 0 {
            (1, ai as u128)
        } else {
            let (pn, pd) = fracs[i - 1];
            (pd - pn, pd * ai as u128)
        };
        let g = num.gcd(&den);
        fracs.push((num / g, den / g));
    }
    let d = fracs.iter().fold(1u128, |l, &(_, den)| l.lcm(&den));
    let w: Vec<u128> = fracs.iter().map(|&(n, den)| n * (d / den)).collect();
    let g = w.iter().fold(d, |g, &x| g.gcd(&x));
    let weights: Vec<u64> = w.iter().map(|&x| u64::try_from(x / g).ok()).collect::<Option<_>>()?;
    let weights = WeightVector::try_from(weights).ok()?;
    link_descriptor(&weights, u64::try_from(d / g).ok()?).ok()
}

fn chain_exponent_lists() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..12, 3..6)
}

fn bp_exponent_lists() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..6, 3..5)
        .prop_filter("small Milnor number", |a| a.iter().map(|x| x - 1).product::<u64>() <= 150)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn descriptor_identities(a in chain_exponent_lists()) {
        let Some(link) = chain_link(&a) else { return Ok(()) };
        let d = link.degree();
        let lcm = link.u().iter().fold(1u64, |l, &u| l.lcm(&u));
        prop_assert_eq!(d % lcm, 0);
        for ((&u, &v), &w) in link.u().iter().zip(link.v()).zip(link.weights().as_slice()) {
            let g = d.gcd(&w);
            prop_assert_eq!(u * g, d);
            prop_assert_eq!(v * g, w);
            prop_assert_eq!(u.gcd(&v), 1);
            prop_assert_eq!(u as u128 * v as u128 * (g as u128).pow(2), d as u128 * w as u128);
        }
    }

    #[test]
    fn chain_links_are_recognized(a in chain_exponent_lists()) {
        let Some(link) = chain_link(&a) else { return Ok(()) };
        let form = chain_exponents(link.weights(), link.degree()).expect("generating order");
        prop_assert_eq!(&form.exponents, &a);
        prop_assert!(form.satisfies(link.weights(), link.degree()));
        let all = find_chain_orderings(link.weights(), link.degree());
        prop_assert!(all.contains(&form));
        prop_assert!(all.iter().all(|f| f.satisfies(link.weights(), link.degree())));
    }

    #[test]
    fn chain_link_homology_invariants(a in chain_exponent_lists()) {
        let Some(link) = chain_link(&a) else { return Ok(()) };
        let table = SubsetTable::build(&link).expect("exact c recursion");
        prop_assert!((0..=table.full_mask()).all(|m| !table.c(m).is_zero()));
        let h = homology_summary(&link).expect("integral Betti sum");
        prop_assert!(h.is_divisibility_chain());
        prop_assert!(h.torsion.iter().all(|d| d > &BigUint::from(1u32)));
        // only subset sizes with n − s + 1 odd carry a nonzero k
        let n = link.n();
        for m in 0..=table.full_mask() {
            if (n + 1 - m.count_ones() as usize).is_multiple_of(2) {
                prop_assert!(table.k(m).is_zero());
            }
        }
        // purity
        prop_assert_eq!(homology_summary(&link).unwrap(), h);
    }

    #[test]
    fn homology_ignores_variable_order(a in chain_exponent_lists(), seed in any::<u64>()) {
        let Some(link) = chain_link(&a) else { return Ok(()) };
        let mut w = link.weights().as_slice().to_vec();
        let len = w.len();
        w.rotate_left((seed as usize) % len);
        let shuffled = link_descriptor(&WeightVector::try_from(w).unwrap(), link.degree()).unwrap();
        prop_assert_eq!(homology_summary(&shuffled).unwrap(), homology_summary(&link).unwrap());
    }

    #[test]
    fn bp_oracle_agrees(a in bp_exponent_lists()) {
        let link = bp_link(&a).unwrap();
        let form = bp_exponents(link.weights(), link.degree()).expect("BP weights");
        prop_assert!(form.satisfies(link.weights(), link.degree()));
        let oracle = oracle_homology(&a, 4096).unwrap();
        let algorithm = homology_summary(&link).unwrap();
        prop_assert_eq!(&oracle.betti, &betti(&link).unwrap());
        prop_assert_eq!(oracle.torsion_multiset(), algorithm.torsion_multiset());
    }

    #[test]
    fn snf_chain_and_determinant(rows in prop::collection::vec(prop::collection::vec(-9i64..10, 4), 4)) {
        let m = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        let f = &snf.invariant_factors;
        for p in f.windows(2) {
            if !p[1].is_zero() {
                prop_assert!((&p[1] % &p[0]).is_zero());
            }
        }
        let det = determinant(&rows);
        if det != 0 {
            prop_assert_eq!(f.iter().product::<BigUint>(), BigUint::from(det.unsigned_abs()));
        } else {
            prop_assert!(f.iter().any(|x| x.is_zero()));
        }
    }

    #[test]
    fn scan_is_order_stable(perm in Just((0..10usize).collect::<Vec<_>>()).prop_shuffle()) {
        let parsed = parse_catalog(link_homology::catalog::SAMPLE_CATALOG).unwrap();
        let shuffled: Vec<CatalogEntry> = perm.iter().map(|&i| parsed.entries[i].clone()).collect();
        let base = scan(&parsed.entries, &ScanOptions::default());
        let moved = scan(&shuffled, &ScanOptions::default());
        for (k, &i) in perm.iter().enumerate() {
            prop_assert_eq!(&moved.entries[k], &base.entries[i]);
        }
    }

    #[test]
    fn report_round_trips(rows in prop::collection::vec((2i64..40, 2i64..40, 2i64..40, any::<bool>()), 0..8)) {
        let text: String = rows
            .iter()
            .map(|&(a, b, c, ke)| {
                let mut w = [a, b, c];
                w.sort();
                format!("{},{},{},{}\n", w[0], w[1], w[2], u8::from(ke))
            })
            .collect();
        let Ok(parsed) = parse_catalog(&format!("#! weights=3\n{text}")) else { return Ok(()) };
        let report = scan(&parsed.entries, &ScanOptions::default()).with_rejected(&parsed.errors);
        let json = emit_report(&report, ReportFormat::Json);
        prop_assert_eq!(&parse_report_json(&json).unwrap(), &report);
        let csv = emit_report(&report, ReportFormat::Csv);
        prop_assert_eq!(&parse_report_csv(&csv).unwrap(), &report);
    }
}

/// Bareiss fraction-free determinant.
fn determinant(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}
