use std::ffi::{CStr, CString};
use std::ptr;

use supermodular_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    sm_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(sm_last_error_message())
        .to_str()
        .unwrap()
        .to_string()
}

const SQUARE: &str = r#"{"ground":["a","b","c"],"values":[
  {"set":[],"value":"0"},{"set":["a"],"value":"1"},{"set":["b"],"value":"1"},{"set":["c"],"value":"1"},
  {"set":["a","b"],"value":"4"},{"set":["a","c"],"value":"4"},{"set":["b","c"],"value":"4"},
  {"set":["a","b","c"],"value":"9"}]}"#;

#[test]
fn game_lifecycle() {
    unsafe {
        let text = CString::new(SQUARE).unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(sm_game_from_json(text.as_ptr(), &mut g), SmStatus::Ok);
        let mut n = 0u32;
        assert_eq!(sm_game_ground_size(g, &mut n), SmStatus::Ok);
        assert_eq!(n, 3);
        let mut sup = false;
        assert_eq!(sm_game_is_supermodular(g, &mut sup), SmStatus::Ok);
        assert!(sup);
        let mut dim = 0u32;
        assert_eq!(sm_face_dimension(g, &mut dim), SmStatus::Ok);
        assert_eq!(dim, 7);
        let mut s = ptr::null_mut();
        assert_eq!(sm_game_descriptors_json(g, &mut s), SmStatus::Ok);
        let bundle: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(bundle["en_part"].as_array().unwrap().len(), 6);
        assert_eq!(sm_game_to_json(g, &mut s), SmStatus::Ok);
        let back = CString::new(take(s)).unwrap();
        let mut g2 = ptr::null_mut();
        assert_eq!(sm_game_from_json(back.as_ptr(), &mut g2), SmStatus::Ok);
        assert_eq!(sm_compare_json(g, g2, &mut s), SmStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(report["agreement"], true);
        assert_eq!(report["ii"], true);
        sm_game_free(g);
        sm_game_free(g2);
    }
}

#[test]
fn random_games_and_rays() {
    unsafe {
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(sm_game_random(4, 3, 3, 2, &mut a), SmStatus::Ok);
        assert_eq!(sm_game_random(4, 3, 3, 2, &mut b), SmStatus::Ok);
        let (mut sa, mut sb) = (ptr::null_mut(), ptr::null_mut());
        sm_game_to_json(a, &mut sa);
        sm_game_to_json(b, &mut sb);
        assert_eq!(take(sa), take(sb));
        sm_game_free(a);
        sm_game_free(b);
        let mut count = 0u64;
        assert_eq!(sm_extreme_ray_count(3, false, &mut count), SmStatus::Ok);
        assert_eq!(count, 5);
        assert_eq!(
            sm_extreme_ray_count(6, true, &mut count),
            SmStatus::GuardExceeded
        );
        assert!(last_error().contains("exceeds"));
    }
}

#[test]
fn error_paths() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            sm_game_from_json(ptr::null(), &mut g),
            SmStatus::NullPointer
        );
        let bad = CString::new("{\"ground\":[\"a\"]}").unwrap();
        assert_eq!(
            sm_game_from_json(bad.as_ptr(), &mut g),
            SmStatus::InvalidInput
        );
        assert!(last_error().contains("values"));
        let non = CString::new(
            r#"{"ground":["a","b"],"values":[{"set":[],"value":"0"},{"set":["a"],"value":"0"},
            {"set":["b"],"value":"0"},{"set":["a","b"],"value":"-1"}]}"#,
        )
        .unwrap();
        assert_eq!(sm_game_from_json(non.as_ptr(), &mut g), SmStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(
            sm_game_descriptors_json(g, &mut s),
            SmStatus::NotSupermodular
        );
        let mut n = 0u32;
        assert_eq!(
            sm_game_ground_size(ptr::null(), &mut n),
            SmStatus::NullPointer
        );
        assert_eq!(sm_game_ground_size(g, &mut n), SmStatus::Ok);
        assert_eq!(last_error(), "");
        sm_game_free(g);
        sm_game_free(ptr::null_mut());
        sm_string_free(ptr::null_mut());
    }
}

#[test]
fn header_lists_every_entry_point() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/supermodular.h"
    ))
    .unwrap();
    for f in [
        "sm_game_from_json",
        "sm_game_random",
        "sm_game_free",
        "sm_game_is_supermodular",
        "sm_game_descriptors_json",
        "sm_compare_json",
        "sm_extreme_ray_count",
        "sm_face_dimension",
        "sm_last_error_message",
        "sm_string_free",
        "SM_STATUS_GUARD_EXCEEDED",
    ] {
        assert!(header.contains(f), "{f} missing from header");
    }
}
