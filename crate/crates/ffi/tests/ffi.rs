use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use shadow_census_ffi::*;

fn last_error() -> String {
    let p = shc_last_error_message();
    assert!(!p.is_null(), "no error message recorded");
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { shc_string_free(p) };
    s
}

#[test]
fn census_through_handles() {
    unsafe {
        let mut cat = ptr::null_mut();
        assert_eq!(shc_catalog_enumerate(1, 2, &mut cat), ShcStatus::Ok);
        assert!(shc_last_error_message().is_null());
        let mut count = 0;
        assert_eq!(shc_catalog_record_count(cat, &mut count), ShcStatus::Ok);
        assert_eq!(count, 11);

        let mut hist = [0usize; 2];
        let mut len = 0;
        assert_eq!(
            shc_catalog_histogram(cat, hist.as_mut_ptr(), hist.len(), &mut len),
            ShcStatus::Ok
        );
        assert_eq!((len, hist), (4, [2, 5]));
        let mut acyclic = 0;
        assert_eq!(shc_catalog_acyclic_count(cat, &mut acyclic), ShcStatus::Ok);
        assert_eq!(acyclic, 2);

        let mut text = ptr::null_mut();
        assert_eq!(shc_catalog_render(cat, &mut text), ShcStatus::Ok);
        let rendered = take_string(text);
        let c = CString::new(rendered.clone()).unwrap();
        let mut again = ptr::null_mut();
        assert_eq!(shc_catalog_parse(c.as_ptr(), &mut again), ShcStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(shc_catalog_render(again, &mut text), ShcStatus::Ok);
        assert_eq!(take_string(text), rendered);

        let mut certified_count = 0;
        for i in 0..count {
            let mut model = ptr::null_mut();
            assert_eq!(shc_catalog_model(cat, i, &mut model), ShcStatus::Ok);
            let mut h = ShcHomology::default();
            assert_eq!(shc_model_homology(model, &mut h), ShcStatus::Ok);
            let mut certified = false;
            assert_eq!(shc_model_certify(model, &mut certified), ShcStatus::Ok);
            assert_eq!(certified, h.acyclic, "record {i}");
            if certified {
                assert_eq!(h.betti, [1, 0, 0]);
                certified_count += 1;
            }
            shc_model_free(model);
        }
        assert_eq!(certified_count, 2);

        let mut model = ptr::null_mut();
        let mut certified = true;
        assert_eq!(shc_catalog_model(cat, 0, &mut model), ShcStatus::Ok);
        assert_eq!(shc_model_certify(model, &mut certified), ShcStatus::Ok);
        assert!(!certified);
        assert!(last_error().contains("not acyclic"));
        shc_model_free(model);

        assert_eq!(shc_catalog_model(cat, 11, &mut model), ShcStatus::Precondition);
        assert!(last_error().contains("outside a catalog of 11"));
        shc_catalog_free(again);
        shc_catalog_free(cat);
    }
}

#[test]
fn torsion_of_a_projective_plane() {
    let doc = CString::new("format shadow-model 1\nregion genus=1 orientable=0 slots=-\n").unwrap();
    unsafe {
        let mut model = ptr::null_mut();
        assert_eq!(
            shc_model_parse(doc.as_ptr(), &mut model),
            ShcStatus::Ok,
            "{}",
            last_error()
        );
        let mut h = ShcHomology::default();
        assert_eq!(shc_model_homology(model, &mut h), ShcStatus::Ok);
        assert_eq!((h.betti, h.torsion_1_count), ([1, 0, 0], 1));
        let mut t = [0u64; 4];
        let mut len = 0;
        assert_eq!(
            shc_model_torsion(model, 1, t.as_mut_ptr(), t.len(), &mut len),
            ShcStatus::Ok
        );
        assert_eq!(&t[..len], &[2]);
        assert_eq!(shc_model_torsion(model, 2, ptr::null_mut(), 0, &mut len), ShcStatus::Ok);
        assert_eq!(len, 0);
        assert_eq!(
            shc_model_torsion(model, 3, ptr::null_mut(), 0, &mut len),
            ShcStatus::Precondition
        );
        let mut text = ptr::null_mut();
        assert_eq!(shc_model_render(model, &mut text), ShcStatus::Ok);
        assert_eq!(take_string(text), doc.to_str().unwrap());
        shc_model_free(model);
    }
}

#[test]
fn encodings() {
    let clean = CString::new(
        "vertex 0 kind=B\nvertex 1 kind=P:3\nvertex 2 kind=Y12\nvertex 3 kind=Y12\nvertex 4 kind=D\nvertex 5 kind=D\n\
         edge 0 1\nedge 1 2 mark=double\nedge 1 3 mark=double\nedge 2 4 mark=single\nedge 3 5 mark=single\n",
    )
    .unwrap();
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(shc_encoding_parse(clean.as_ptr(), &mut g), ShcStatus::Ok);
        let mut report = ShcEncodingReport::default();
        assert_eq!(shc_encoding_check(g, &mut report), ShcStatus::Ok);
        assert_eq!(
            report,
            ShcEncodingReport {
                clean: true,
                acyclic: true,
                violation_count: 0
            }
        );
        let mut injective = false;
        assert_eq!(shc_encoding_retraction_check(g, &mut injective), ShcStatus::Ok);
        assert!(injective);
        let mut model = ptr::null_mut();
        assert_eq!(shc_encoding_reconstruct(g, &mut model), ShcStatus::Ok);
        let mut h = ShcHomology::default();
        assert_eq!(shc_model_homology(model, &mut h), ShcStatus::Ok);
        assert!(h.acyclic);
        shc_model_free(model);
        shc_encoding_free(g);

        let closed = CString::new("vertex 0 kind=D\nvertex 1 kind=D\nedge 0 1\n").unwrap();
        assert_eq!(shc_encoding_parse(closed.as_ptr(), &mut g), ShcStatus::Ok);
        assert_eq!(shc_encoding_check(g, &mut report), ShcStatus::Precondition);
        shc_encoding_free(g);
    }
}

#[test]
fn errors_are_reported_not_raised() {
    unsafe {
        let mut cat = ptr::null_mut();
        assert_eq!(shc_catalog_parse(ptr::null(), &mut cat), ShcStatus::NullPointer);
        assert!(last_error().contains("document"));
        let truncated = CString::new("format shadow-catalog 1\nvertices 1\n").unwrap();
        assert_eq!(shc_catalog_parse(truncated.as_ptr(), &mut cat), ShcStatus::Parse);
        assert!(last_error().contains("line 3"));
        let future = CString::new("format shadow-catalog 7\n").unwrap();
        assert_eq!(shc_catalog_parse(future.as_ptr(), &mut cat), ShcStatus::Version);
        let bad_utf8 = [0xffu8, 0xfe, 0];
        assert_eq!(
            shc_catalog_parse(bad_utf8.as_ptr().cast(), &mut cat),
            ShcStatus::InvalidUtf8
        );
        assert!(cat.is_null());
        assert_eq!(
            shc_catalog_record_count(ptr::null(), ptr::null_mut()),
            ShcStatus::NullPointer
        );
        let two_b = CString::new("vertex 0 kind=B\nvertex 1 kind=B\nedge 0 1\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(shc_encoding_parse(two_b.as_ptr(), &mut g), ShcStatus::Parse);
        shc_catalog_free(ptr::null_mut());
        shc_model_free(ptr::null_mut());
        shc_encoding_free(ptr::null_mut());
        shc_string_free(ptr::null_mut());
        assert_eq!(
            CStr::from_ptr(shc_version()).to_str().unwrap(),
            env!("CARGO_PKG_VERSION")
        );
    }
}

/// `target/<profile>` of the running test binary.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|deps| deps.parent()).unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = crate_dir.join("include/shadow_census.h");
    let lib = profile_dir().join("libshadow_census_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(
        &src,
        r#"#include "shadow_census.h"
#include <stdio.h>
int main(void) {
    ShcCatalog *cat = NULL;
    size_t count = 0, acyclic = 0;
    if (shc_catalog_enumerate(1, 1, &cat) != SHC_STATUS_OK) return 1;
    if (shc_catalog_record_count(cat, &count) != SHC_STATUS_OK) return 2;
    if (shc_catalog_acyclic_count(cat, &acyclic) != SHC_STATUS_OK) return 3;
    if (shc_catalog_parse(NULL, &cat) != SHC_STATUS_NULL_POINTER) return 4;
    printf("%zu %zu %s\n", count, acyclic, shc_last_error_message());
    shc_catalog_free(cat);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(header.parent().unwrap())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke program failed to build");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "11 2 `document` is null\n");
}
