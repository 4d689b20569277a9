//! Acceptance criteria 1-10. Run with `--nocapture` to see the verdicts.

use schubres::suite::{run_criterion, CriterionResult};

fn verdict(id: u32) -> CriterionResult {
    let r = run_criterion(id);
    println!(
        "{} criterion {:>2} {:<32} {:>10.1} ms  {}",
        if r.passed { "PASS" } else { "FAIL" },
        r.id,
        r.name,
        r.elapsed_ms,
        r.detail
    );
    r
}

macro_rules! criterion {
    ($name:ident, $id:expr) => {
        #[test]
        fn $name() {
            let r = verdict($id);
            assert!(r.passed, "criterion {} failed: {}", r.id, r.detail);
        }
    };
}

criterion!(criterion_01_sigma_example, 1);
criterion!(criterion_02_building_sweep, 2);
criterion!(criterion_03_tower_point_counts, 3);
criterion!(criterion_04_flag_resolution_cells, 4);
criterion!(criterion_05_bott_samelson_isomorphism, 5);
criterion!(criterion_06_graph_sum_parametrizations, 6);
criterion!(criterion_07_w_flag_resolution, 7);
criterion!(criterion_08_embedded_resolution, 8);
criterion!(criterion_09_dimension_consistency, 9);
criterion!(criterion_10_linear_algebra_properties, 10);
