use std::ffi::{CStr, CString};
use std::ptr;

use link_homology_ffi::*;

fn last_error() -> String {
    let p = lh_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn link(weights: &[i64], degree: Option<u64>) -> Result<*mut LhLink, LhStatus> {
    let mut out = ptr::null_mut();
    let status = unsafe {
        match degree {
            Some(d) => lh_link_new(weights.as_ptr(), weights.len(), d, &mut out),
            None => lh_link_new_fano(weights.as_ptr(), weights.len(), &mut out),
        }
    };
    if status == LhStatus::Ok {
        Ok(out)
    } else {
        Err(status)
    }
}

#[test]
fn homology_through_handles() {
    let l = link(&[75, 10, 163, 331, 247], None).unwrap();
    unsafe {
        assert_eq!(lh_link_degree(l), 825);
        lh_link_free(l);
    }
    let l = link(&[75, 10, 163, 331, 247], Some(825)).unwrap();
    unsafe {
        let mut b = 0;
        assert_eq!(lh_link_betti(l, &mut b), LhStatus::Ok);
        assert_eq!(b, 10);

        let mut h = ptr::null_mut();
        assert_eq!(lh_link_homology(l, &mut h), LhStatus::Ok);
        let mut hb = 0;
        assert_eq!(lh_homology_betti(h, &mut hb), LhStatus::Ok);
        assert_eq!(hb, 10);
        let torsion: Vec<u64> = (0..lh_homology_torsion_len(h))
            .map(|i| {
                let mut d = 0;
                assert_eq!(lh_homology_torsion_at(h, i, &mut d), LhStatus::Ok);
                d
            })
            .collect();
        assert_eq!(torsion, [55, 5, 5, 5, 5]);
        let mut d = 0;
        assert_eq!(lh_homology_torsion_at(h, 5, &mut d), LhStatus::NotFound);

        let label = lh_homology_label(h);
        assert_eq!(CStr::from_ptr(label).to_str().unwrap(), "Z^10 ⊕ Z/55 ⊕ (Z/5)^4");
        lh_string_free(label);
        lh_homology_free(h);
        lh_link_free(l);
    }
}

#[test]
fn polynomial_forms() {
    let l = link(&[10, 75, 163, 247, 331], Some(825)).unwrap();
    unsafe {
        let mut buf = [0u64; 8];
        let mut len = 0;
        assert_eq!(lh_link_bp_exponents(l, buf.as_mut_ptr(), 8, &mut len), LhStatus::NotFound);
        assert_eq!(len, 0);

        let mut count = 0;
        assert_eq!(lh_link_chain_count(l, &mut count), LhStatus::Ok);
        assert!(count >= 1);
        let mut order = [0usize; 8];
        let found = (0..count).any(|i| {
            assert_eq!(
                lh_link_chain_form(l, i, order.as_mut_ptr(), buf.as_mut_ptr(), 8, &mut len),
                LhStatus::Ok
            );
            order[..len] == [1, 0, 2, 4, 3] && buf[..len] == [11, 75, 5, 2, 2]
        });
        assert!(found);
        assert_eq!(
            lh_link_chain_form(l, count, order.as_mut_ptr(), buf.as_mut_ptr(), 8, &mut len),
            LhStatus::NotFound
        );
        assert_eq!(
            lh_link_chain_form(l, 0, order.as_mut_ptr(), buf.as_mut_ptr(), 2, &mut len),
            LhStatus::Overflow
        );
        assert_eq!(len, 5);
        lh_link_free(l);
    }

    let l = link(&[15, 10, 6], Some(30)).unwrap();
    unsafe {
        let mut buf = [0u64; 3];
        let mut len = 0;
        assert_eq!(lh_link_bp_exponents(l, buf.as_mut_ptr(), 3, &mut len), LhStatus::Ok);
        assert_eq!(buf, [2, 3, 5]);
        lh_link_free(l);
    }
}

#[test]
fn errors_set_status_and_message() {
    assert_eq!(link(&[2, 4, 6], None).unwrap_err(), LhStatus::InvalidInput);
    assert!(last_error().contains("common divisor 2"));
    assert_eq!(link(&[1, -3, 1], Some(4)).unwrap_err(), LhStatus::InvalidInput);
    assert!(last_error().contains("position 1"));

    let mut out = ptr::null_mut();
    let status = unsafe { lh_link_new(ptr::null(), 3, 3, &mut out) };
    assert_eq!(status, LhStatus::NullPointer);
    assert!(last_error().contains("weights"));

    let l = link(&[1, 1, 1], Some(3)).unwrap();
    assert!(lh_last_error_message().is_null());
    unsafe {
        assert_eq!(lh_link_betti(l, ptr::null_mut()), LhStatus::NullPointer);
        lh_link_free(l);
        lh_link_free(ptr::null_mut());
        lh_homology_free(ptr::null_mut());
        lh_string_free(ptr::null_mut());
        assert_eq!(lh_homology_torsion_len(ptr::null()), 0);
        assert!(lh_homology_label(ptr::null()).is_null());
    }
}

#[test]
fn betti_overflow_is_reported() {
    // 21 unit weights at degree 11: b = (10^21 - 10)/11
    let l = link(&[1i64; 21], Some(11)).unwrap();
    unsafe {
        let mut b = 0;
        let status = lh_link_betti(l, &mut b);
        assert_eq!(status, LhStatus::Overflow, "{}", last_error());
        lh_link_free(l);
    }
    let l = link(&[1i64; 22], Some(3)).unwrap();
    unsafe {
        let mut b = 0;
        assert_eq!(lh_link_betti(l, &mut b), LhStatus::InvalidInput);
        assert!(last_error().contains("limit"));
        lh_link_free(l);
    }
}

#[test]
fn oracle_check_codes() {
    unsafe {
        assert_eq!(lh_oracle_check([2u64, 3, 5].as_ptr(), 3, 4096), LhStatus::Ok);
        assert_eq!(lh_oracle_check([3u64, 4, 5].as_ptr(), 3, 4096), LhStatus::Ok);
        assert_eq!(lh_oracle_check([6u64, 6, 6].as_ptr(), 3, 10), LhStatus::InvalidInput);
        assert_eq!(lh_oracle_check([2u64, 3].as_ptr(), 2, 4096), LhStatus::InvalidInput);
    }
}

#[test]
fn scan_csv_formats() {
    let text = CString::new(link_homology::catalog::SAMPLE_CATALOG).unwrap();
    unsafe {
        let mut out = ptr::null_mut();
        let json = CString::new("json").unwrap();
        assert_eq!(lh_scan_csv(text.as_ptr(), json.as_ptr(), &mut out), LhStatus::Ok);
        let report = link_homology::catalog::parse_report_json(CStr::from_ptr(out).to_str().unwrap()).unwrap();
        lh_string_free(out);
        assert_eq!(report.summary.total, 10);
        assert_eq!(report.summary.chain, 10);

        let bad = CString::new("yaml").unwrap();
        assert_eq!(lh_scan_csv(text.as_ptr(), bad.as_ptr(), &mut out), LhStatus::InvalidInput);
        assert!(last_error().contains("yaml"));

        let empty = CString::new("# nothing\n").unwrap();
        assert_eq!(lh_scan_csv(empty.as_ptr(), json.as_ptr(), &mut out), LhStatus::InvalidInput);
    }
}
