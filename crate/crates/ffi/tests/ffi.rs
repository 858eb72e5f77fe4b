use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use resyn_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> Option<String> {
    let p = resyn_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string())
}

unsafe fn text(r: *const ResynRegex) -> String {
    let p = resyn_regex_to_string(r);
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    resyn_string_free(p);
    s
}

#[test]
fn parse_canonicalize_match() {
    unsafe {
        let mut raw = ptr::null_mut();
        assert_eq!(resyn_regex_parse(c("az|ab").as_ptr(), &mut raw), ResynStatus::Ok);
        assert_eq!(text(raw), "az|ab");
        let mut canon = ptr::null_mut();
        assert_eq!(resyn_regex_canonicalize(raw, ResynMode::Full, &mut canon), ResynStatus::Ok);
        assert_eq!(text(canon), "a[bz]");
        let mut hit = false;
        assert_eq!(resyn_regex_matches(canon, c("ab").as_ptr(), &mut hit), ResynStatus::Ok);
        assert!(hit);
        assert_eq!(resyn_regex_matches(canon, c("ac").as_ptr(), &mut hit), ResynStatus::Ok);
        assert!(!hit);
        resyn_regex_free(raw);
        resyn_regex_free(canon);
        resyn_regex_free(ptr::null_mut());
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(resyn_regex_parse(c("(a").as_ptr(), &mut r), ResynStatus::ParseError);
        assert!(r.is_null());
        assert!(last_error().is_some());
        assert_eq!(resyn_regex_parse(ptr::null(), &mut r), ResynStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(
            resyn_regex_parse(bad.as_ptr() as *const c_char, &mut r),
            ResynStatus::InvalidUtf8
        );
        assert_eq!(resyn_regex_parse(c("a").as_ptr(), ptr::null_mut()), ResynStatus::NullPointer);
        let mut hit = false;
        assert_eq!(resyn_regex_matches(ptr::null(), c("a").as_ptr(), &mut hit), ResynStatus::NullPointer);
        // A successful call clears the message.
        assert_eq!(resyn_regex_parse(c("a").as_ptr(), &mut r), ResynStatus::Ok);
        assert!(last_error().is_none());
        resyn_regex_free(r);
        assert!(resyn_regex_to_string(ptr::null()).is_null());
    }
}

#[test]
fn validation_reasons() {
    unsafe {
        let mut reason = ResynReason::Unparsable;
        assert_eq!(resyn_validate(c("\\d+").as_ptr(), &mut reason), ResynStatus::Ok);
        assert_eq!(reason, ResynReason::Accepted);
        resyn_validate(c("a(?=b)").as_ptr(), &mut reason);
        assert_eq!(reason, ResynReason::Lookaround);
        resyn_validate(c("(a)\\1").as_ptr(), &mut reason);
        assert_eq!(reason, ResynReason::Backreference);
    }
}

#[test]
fn synthesis_both_routes() {
    unsafe {
        let pos = [c("ab-12"), c("xy-345")];
        let neg = [c("ab12")];
        let pp: Vec<*const c_char> = pos.iter().map(|s| s.as_ptr()).collect();
        let np: Vec<*const c_char> = neg.iter().map(|s| s.as_ptr()).collect();
        let mut out = ptr::null_mut();
        let st = resyn_synthesize(pp.as_ptr(), 2, np.as_ptr(), 1, ptr::null(), &mut out);
        assert_eq!(st, ResynStatus::Ok);
        assert_eq!(text(out), "[a-z]+-\\d+");
        resyn_regex_free(out);

        let mut gt = ptr::null_mut();
        resyn_regex_parse(c("[a-z]+-\\d+").as_ptr(), &mut gt);
        let st = resyn_synthesize(pp.as_ptr(), 2, np.as_ptr(), 1, gt, &mut out);
        assert_eq!(st, ResynStatus::Ok);
        resyn_regex_free(out);
        resyn_regex_free(gt);

        let st = resyn_synthesize(ptr::null(), 0, ptr::null(), 0, ptr::null(), &mut out);
        assert_eq!(st, ResynStatus::SynthesisFailed);
    }
}

#[test]
fn costs_and_metrics() {
    unsafe {
        let mut n = 0usize;
        assert_eq!(resyn_scs_length(c("http").as_ptr(), c("ftps").as_ptr(), &mut n), ResynStatus::Ok);
        assert_eq!(n, 6);
        let set = [c("bat"), c("cat"), c("dog")];
        let sp: Vec<*const c_char> = set.iter().map(|s| s.as_ptr()).collect();
        assert_eq!(resyn_alignment_cost(sp.as_ptr(), 3, &mut n), ResynStatus::Ok);
        assert_eq!(n, 7);
    }
    assert_eq!(resyn_mcc(5, 5, 0, 0), 1.0);
    assert_eq!(resyn_mcc(5, 0, 0, 0), 0.0);
    assert!((resyn_mcc(3, 2, 1, 2) - 4.0 / 240f64.sqrt()).abs() < 1e-12);
}

/// Compiles the C example against the generated header and the shared
/// library, when a C compiler is present.
#[test]
fn c_program_links_and_runs() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = crate_dir.join("include/resyn.h");
    let h = std::fs::read_to_string(&header).unwrap();
    for f in ["resyn_regex_parse", "resyn_synthesize", "resyn_last_error_message", "typedef struct ResynRegex ResynRegex"] {
        assert!(h.contains(f), "header lacks {f}");
    }
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping link check");
        return;
    }
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().unwrap().parent().unwrap();
    // Test builds only produce the rlib; build the shared library too.
    let status = Command::new(env!("CARGO"))
        .args(["build", "-q", "-p", "resyn-ffi", "--lib"])
        .current_dir(&crate_dir)
        .status()
        .unwrap();
    assert!(status.success());
    let lib = lib_dir.join(format!("{}resyn_ffi{}", std::env::consts::DLL_PREFIX, std::env::consts::DLL_SUFFIX));
    assert!(lib.exists(), "{} missing", lib.display());
    let tmp = tempfile::tempdir().unwrap();
    let bin = tmp.path().join("smoke");
    let status = Command::new("cc")
        .arg(crate_dir.join("examples/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg("-L")
        .arg(lib_dir)
        .arg("-lresyn_ffi")
        .arg("-o")
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).env("LD_LIBRARY_PATH", lib_dir).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "[a-z]+-\\d+ 1\n");
}
