use std::path::{Path, PathBuf};
use std::process::Command;

fn header_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/link_homology.h")
}

const EXPORTS: &[&str] = &[
    "lh_link_new",
    "lh_link_new_fano",
    "lh_link_free",
    "lh_link_degree",
    "lh_link_homology",
    "lh_link_betti",
    "lh_link_bp_exponents",
    "lh_link_chain_count",
    "lh_link_chain_form",
    "lh_homology_betti",
    "lh_homology_torsion_len",
    "lh_homology_torsion_at",
    "lh_homology_label",
    "lh_homology_free",
    "lh_oracle_check",
    "lh_scan_csv",
    "lh_string_free",
    "lh_last_error_message",
];

#[test]
fn header_declares_everything() {
    let header = std::fs::read_to_string(header_path()).unwrap();
    for name in EXPORTS {
        assert!(header.contains(&format!("{name}(")), "missing {name}");
    }
    assert!(header.contains("typedef struct LhLink LhLink;"));
    assert!(header.contains("typedef struct LhHomology LhHomology;"));
    for (name, code) in [("OK", 0), ("INVALID_INPUT", 1), ("NOT_FOUND", 2), ("MISMATCH", 4), ("OVERFLOW", 6)] {
        assert!(header.contains(&format!("LH_STATUS_{name} = {code},")), "LH_STATUS_{name}");
    }
}

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "link_homology.h"

int main(void) {
    int64_t w[] = {11, 27, 36, 45, 107};
    LhLink *link = NULL;
    if (lh_link_new(w, 5, 225, &link) != LH_STATUS_OK) return 10;
    LhHomology *h = NULL;
    if (lh_link_homology(link, &h) != LH_STATUS_OK) return 11;
    uint64_t b = 0, t = 0;
    if (lh_homology_betti(h, &b) != LH_STATUS_OK || b != 20) return 12;
    if (lh_homology_torsion_len(h) != 1) return 13;
    if (lh_homology_torsion_at(h, 0, &t) != LH_STATUS_OK || t != 5) return 14;
    char *label = lh_homology_label(h);
    printf("%s\n", label);
    lh_string_free(label);
    lh_homology_free(h);
    lh_link_free(link);

    int64_t bad[] = {2, 4};
    if (lh_link_new_fano(bad, 2, &link) != LH_STATUS_INVALID_INPUT) return 15;
    if (strstr(lh_last_error_message(), "primitive") == NULL) return 16;
    return 0;
}
"#;

/// `target/<profile>` for this test binary.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler available; skipping");
        return;
    }
    let lib = profile_dir().join("liblink_homology_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("lh-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    let exe = dir.join("main");
    std::fs::write(&src, PROGRAM).unwrap();

    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(&src)
        .arg("-I")
        .arg(header_path().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C build failed");

    let out = Command::new(&exe).output().unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(0), "C program exit");
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "Z^20 ⊕ Z/5");
}
