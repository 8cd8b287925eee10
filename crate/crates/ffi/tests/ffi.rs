use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use taxicab5_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    t5_string_free(s);
    out
}

unsafe fn parse(text: &str) -> *mut T5GaussInt {
    let c = CString::new(text).unwrap();
    let mut z = ptr::null_mut();
    assert_eq!(t5_gaussint_parse(c.as_ptr(), &mut z), T5Status::Ok);
    z
}

unsafe fn render(z: *const T5GaussInt) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(t5_gaussint_to_string(z, &mut s), T5Status::Ok);
    take_string(s)
}

unsafe fn last_error() -> String {
    CStr::from_ptr(t5_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn gaussint_arithmetic() {
    unsafe {
        let a = parse("2+3i");
        let mut p = ptr::null_mut();
        assert_eq!(t5_gaussint_pow(a, 5, &mut p), T5Status::Ok);
        assert_eq!(render(p), "122-597i");

        let mut sq = ptr::null_mut();
        assert_eq!(t5_gaussint_mul(a, a, &mut sq), T5Status::Ok);
        assert_eq!(render(sq), "-5+12i");

        let mut c = ptr::null_mut();
        assert_eq!(t5_gaussint_conj(a, &mut c), T5Status::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(t5_gaussint_add(a, c, &mut s), T5Status::Ok);
        assert_eq!(render(s), "4");

        let mut norm = ptr::null_mut();
        assert_eq!(t5_gaussint_norm(a, &mut norm), T5Status::Ok);
        assert_eq!(take_string(norm), "13");

        let (mut re, mut im) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(t5_gaussint_parts(p, &mut re, &mut im), T5Status::Ok);
        assert_eq!(
            (take_string(re), take_string(im)),
            ("122".into(), "-597".into())
        );

        let mut eq = false;
        let b = parse("2+3i");
        assert_eq!(t5_gaussint_equal(a, b, &mut eq), T5Status::Ok);
        assert!(eq);

        for z in [a, b, p, sq, c, s] {
            t5_gaussint_free(z);
        }
    }
}

#[test]
fn status_codes_and_error_messages() {
    unsafe {
        let bad = CString::new("2+3j").unwrap();
        let mut z = ptr::null_mut();
        assert_eq!(
            t5_gaussint_parse(bad.as_ptr(), &mut z),
            T5Status::ParseError
        );
        assert!(z.is_null());
        assert!(last_error().contains("2+3j"));

        assert_eq!(
            t5_gaussint_parse(ptr::null(), &mut z),
            T5Status::NullPointer
        );
        assert_eq!(
            t5_gaussint_parse(bad.as_ptr(), ptr::null_mut()),
            T5Status::NullPointer
        );

        let invalid = [0xffu8, 0];
        assert_eq!(
            t5_gaussint_parse(invalid.as_ptr() as *const c_char, &mut z),
            T5Status::InvalidUtf8
        );

        let mut q = ptr::null_mut();
        assert_eq!(t5_pell_family(0, &mut q), T5Status::InvalidArgument);
        assert_eq!(
            t5_triple_solution(4, 3, 6, &mut q),
            T5Status::InvalidArgument
        );
        assert!(last_error().contains("Pythagorean"));
        let mut r = ptr::null_mut();
        assert_eq!(
            t5_search_run(0, 5, 1, false, &mut r),
            T5Status::InvalidArgument
        );
        assert_eq!(
            t5_search_run(2, 5, 0, false, &mut r),
            T5Status::InvalidArgument
        );
        let mut s = ptr::null_mut();
        assert_eq!(t5_half_companion(0, &mut s), T5Status::InvalidArgument);
        assert!(q.is_null() && r.is_null() && s.is_null());

        t5_gaussint_free(ptr::null_mut());
        t5_quadruple_free(ptr::null_mut());
        t5_search_result_free(ptr::null_mut());
        t5_string_free(ptr::null_mut());
    }
}

#[test]
fn families_and_canonicalization() {
    unsafe {
        let mut q = ptr::null_mut();
        assert_eq!(t5_pell_family(5, &mut q), T5Status::Ok);
        let mut ok = false;
        assert_eq!(t5_quadruple_verify(q, &mut ok), T5Status::Ok);
        assert!(ok);
        let mut y = ptr::null_mut();
        assert_eq!(t5_quadruple_entry(q, 2, &mut y), T5Status::Ok);
        assert_eq!(render(y), "2378+3363i");
        assert_eq!(t5_quadruple_entry(q, 4, &mut y), T5Status::InvalidArgument);
        let mut e = 0;
        assert_eq!(t5_quadruple_exponent(q, &mut e), T5Status::Ok);
        assert_eq!(e, 5);

        let mut s = ptr::null_mut();
        assert_eq!(t5_pell(10, &mut s), T5Status::Ok);
        assert_eq!(take_string(s), "2378");
        assert_eq!(t5_half_companion(5, &mut s), T5Status::Ok);
        assert_eq!(take_string(s), "3363");

        let mut t = ptr::null_mut();
        assert_eq!(t5_triple_solution(4, 3, 5, &mut t), T5Status::Ok);
        assert_eq!(t5_quadruple_to_json(t, &mut s), T5Status::Ok);
        assert_eq!(
            take_string(s),
            r#"{"w":{"re":"7","im":"5"},"x":{"re":"1","im":"-5"},"y":{"re":"7","im":"-5"},"z":{"re":"1","im":"5"},"exponent":5}"#
        );
        let mut sum = ptr::null_mut();
        assert_eq!(t5_quadruple_left_sum(t, &mut sum), T5Status::Ok);
        assert_eq!(render(sum), "-44192");

        let mut canon = ptr::null_mut();
        assert_eq!(t5_canonicalize_solution(t, &mut canon), T5Status::Ok);

        let (w, x, z) = (parse("3"), parse("1"), parse("2+3i"));
        let mut not_solution = ptr::null_mut();
        assert_eq!(
            t5_quadruple_new(w, x, z, z, 5, &mut not_solution),
            T5Status::Ok
        );
        let mut out = ptr::null_mut();
        assert_eq!(
            t5_canonicalize_solution(not_solution, &mut out),
            T5Status::NotASolution
        );
        assert!(out.is_null());

        let (mut lhs, mut rhs) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(t5_lemma(1, 1, 1, &mut lhs, &mut rhs), T5Status::Ok);
        assert_eq!((render(lhs), render(rhs)), ("80i".into(), "80i".into()));

        for g in [y, sum, w, x, z, lhs, rhs] {
            t5_gaussint_free(g);
        }
        for h in [q, t, canon, not_solution] {
            t5_quadruple_free(h);
        }
    }
}

#[test]
fn search_results_match_library() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(t5_search_run(3, 5, 4, false, &mut r), T5Status::Ok);
        let mut n = 0;
        assert_eq!(t5_search_result_len(r, &mut n), T5Status::Ok);
        let lib = taxicab5::run_search(&taxicab5::SearchConfig::new(3)).unwrap();
        assert_eq!(n, lib.len());

        let (mut rep, mut sum, mut orbit) = (ptr::null_mut(), ptr::null_mut(), 0usize);
        assert_eq!(
            t5_search_result_class(r, 0, &mut rep, &mut sum, &mut orbit),
            T5Status::Ok
        );
        assert_eq!(orbit, lib[0].orbit_size);
        assert_eq!(render(sum), lib[0].sum.to_string());
        assert_eq!(
            t5_search_result_class(r, n, &mut rep, &mut sum, &mut orbit),
            T5Status::InvalidArgument
        );

        let mut text = ptr::null_mut();
        assert_eq!(t5_search_result_to_jsonl(r, &mut text), T5Status::Ok);
        let text = take_string(text);
        let want: String = lib.iter().map(|c| c.to_json_line() + "\n").collect();
        assert_eq!(text, want);

        t5_quadruple_free(rep);
        t5_gaussint_free(sum);
        t5_search_result_free(r);
    }
}

#[test]
fn header_declares_every_export() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(crate_dir.join("include/taxicab5.h")).unwrap();
    let source = std::fs::read_to_string(crate_dir.join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() > 20);
    for name in exports {
        let declared = [" ", "*"]
            .iter()
            .any(|lead| header.contains(&format!("{lead}{name}(")));
        assert!(declared, "{name} missing from header");
    }
    assert!(header.contains("typedef struct T5GaussInt T5GaussInt;"));
    assert!(header.contains("T5_STATUS_NOT_A_SOLUTION = 5"));
}

/// Compiles `c/smoke.c` against the generated header and the static library.
#[test]
fn c_smoke_program() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/ffi-<hash> -> target/<profile>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let staticlib = profile_dir.join("libtaxicab5_ffi.a");
    assert!(staticlib.exists(), "{} not built", staticlib.display());
    let exe = profile_dir.join("taxicab5_c_smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg(crate_dir.join("c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap_or_else(|e| panic!("cannot run {cc}: {e}"));
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "sum=244 classes(B=3)=86\n"
    );
}
