use std::ffi::{CStr, CString};
use std::ptr;

use hbcells_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    hb_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = hb_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn cell_accessors() {
    unsafe {
        let mut cell = ptr::null_mut();
        assert_eq!(hb_cell_new(c("2,3,5,7").as_ptr(), &mut cell), HbStatus::Ok);
        assert!(hb_last_error_message().is_null());
        let (mut dim, mut hom, mut t, mut lo, mut hi) = (0, 0, 0, 0, 0);
        let mut proven = false;
        assert_eq!(hb_cell_dim(cell, &mut dim), HbStatus::Ok);
        assert_eq!(hb_cell_dim_hom(cell, &mut hom), HbStatus::Ok);
        assert_eq!(hb_cell_t(cell, &mut t), HbStatus::Ok);
        assert_eq!(hb_cell_proven(cell, &mut proven), HbStatus::Ok);
        assert_eq!(hb_cell_mu_range(cell, &mut lo, &mut hi), HbStatus::Ok);
        assert_eq!((dim, hom, t, proven, lo, hi), (12, 7, 4, true, 3, 5));

        let mut json = ptr::null_mut();
        assert_eq!(hb_cell_to_json(cell, &mut json), HbStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc["m"], serde_json::json!([2, 3, 5, 7]));
        assert_eq!(doc["dim"], 12);
        hb_cell_free(cell);
        hb_cell_free(ptr::null_mut());
    }
}

#[test]
fn strata_json() {
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(hb_strata_to_json(c("1,5,8,10").as_ptr(), &mut json), HbStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc["strata"][0]["d"], 5);
        assert_eq!(doc["homogeneous_mask"], serde_json::json!([2, 10, 17, 20]));
    }
}

#[test]
fn decomposition_handles() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(hb_decomposition_new(6, &mut d), HbStatus::Ok);
        let mut count = 0;
        assert_eq!(hb_decomposition_cell_count(d, &mut count), HbStatus::Ok);
        assert_eq!(count, 11);

        let mut needed = 0;
        assert_eq!(
            hb_decomposition_betti_numbers(d, ptr::null_mut(), 0, &mut needed),
            HbStatus::Ok
        );
        let mut buf = vec![0u64; needed];
        assert_eq!(
            hb_decomposition_betti_numbers(d, buf.as_mut_ptr(), buf.len(), &mut needed),
            HbStatus::Ok
        );
        assert_eq!(buf, [1, 1, 2, 3, 3, 1]);

        let mut dims = Vec::new();
        for i in 0..count {
            let mut cell = ptr::null_mut();
            assert_eq!(hb_decomposition_cell(d, i, &mut cell), HbStatus::Ok);
            let mut dim = 0;
            hb_cell_dim(cell, &mut dim);
            dims.push(dim);
            hb_cell_free(cell);
        }
        assert_eq!(dims, [0, 1, 2, 2, 3, 3, 3, 4, 4, 4, 5]);

        let mut cell = ptr::null_mut();
        assert_eq!(hb_decomposition_cell(d, 11, &mut cell), HbStatus::IndexOutOfRange);
        assert!(cell.is_null());

        let mut json = ptr::null_mut();
        assert_eq!(hb_decomposition_to_json(d, &mut json), HbStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc["cells"].as_array().unwrap().len(), 11);
        hb_decomposition_free(d);
    }
}

#[test]
fn check_reports() {
    unsafe {
        let mut passed = false;
        let mut json = ptr::null_mut();
        assert_eq!(hb_check(6, 10, 32003, 4, &mut passed, &mut json), HbStatus::Ok);
        assert!(passed);
        let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc["verification"]["seed"], 4);
        assert_eq!(hb_check(12, 0, 0, 0, &mut passed, ptr::null_mut()), HbStatus::Ok);
        assert!(passed);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut cell = ptr::null_mut();
        assert_eq!(hb_cell_new(c("3,2").as_ptr(), &mut cell), HbStatus::InvalidPartition);
        assert!(cell.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(hb_cell_new(c("").as_ptr(), &mut cell), HbStatus::InvalidPartition);
        assert_eq!(hb_cell_new(ptr::null(), &mut cell), HbStatus::NullPointer);
        assert_eq!(hb_cell_new(c("2,4").as_ptr(), ptr::null_mut()), HbStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(hb_cell_new(bad.as_ptr().cast(), &mut cell), HbStatus::InvalidUtf8);

        let mut dim = 0;
        assert_eq!(hb_cell_dim(ptr::null(), &mut dim), HbStatus::NullPointer);

        let mut d = ptr::null_mut();
        assert_eq!(hb_decomposition_new(0, &mut d), HbStatus::InvalidArgument);
        let mut passed = true;
        assert_eq!(hb_check(5, 3, 32004, 1, &mut passed, ptr::null_mut()), HbStatus::NotPrime);
        assert!(last_error().contains("32004"));
        assert_eq!(hb_check(0, 0, 0, 0, &mut passed, ptr::null_mut()), HbStatus::InvalidArgument);

        assert_eq!(CStr::from_ptr(hb_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
        hb_string_free(ptr::null_mut());
    }
}
