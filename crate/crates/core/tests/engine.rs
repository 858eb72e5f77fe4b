mod common;

use common::engine;

#[test]
fn singleton_escape() {
    engine::singleton_escape();
}

#[test]
fn empty_string_branch() {
    engine::empty_string_branch();
}

#[test]
fn consecutive_segmentation_skipped() {
    engine::consecutive_segmentation_skipped();
}

#[test]
fn consecutive_partition_skipped() {
    engine::consecutive_partition_skipped();
}

#[test]
fn all_singleton_partition_rejected() {
    engine::all_singleton_partition_rejected();
}

#[test]
fn single_column_segmentation_falls_through() {
    engine::single_column_segmentation_falls_through();
}

#[test]
fn final_gate_rejects_inconsistent_composition() {
    engine::final_gate_rejects_inconsistent_composition();
}

#[test]
fn no_positives_is_an_error() {
    engine::no_positives_is_an_error();
}

#[test]
fn depth_limit_forces_base() {
    engine::depth_limit_forces_base();
}

#[test]
fn oracle_reproduces_ground_truth() {
    engine::oracle_reproduces_ground_truth();
}
