use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schubres::embres::{kl_count, kl_points};
use schubres::exactlin::{Fp, LinearMap, Matrix, Subspace};
use schubres::grassfib::{make_frame, FrameConfig};
use schubres::report::DEFAULT_BUDGET;
use schubres::wflag::{
    compressed_point, enumerate_gcal, graphs_nested, hstar0_target, in_u, is_gcal, psi_of_maps, psi_tilde,
    GCalPoint, PartialFlag,
};

fn random_maps(cfg: &FrameConfig, rng: &mut ChaCha8Rng) -> Vec<LinearMap> {
    let p = cfg.field().p();
    (1..=cfg.k())
        .map(|i| {
            let target = hstar0_target(cfg, i);
            let rows: Vec<Vec<u8>> = (0..target.dim()).map(|_| vec![rng.gen_range(0..p) as u8]).collect();
            LinearMap::from_matrix(cfg.line(i).clone(), target, Matrix::from_rows(1, &rows)).unwrap()
        })
        .collect()
}

#[test]
fn compressed_graphs_over_gf3() {
    let cfg = make_frame(7, Fp::new(3).unwrap(), &[2, 4, 5], None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let a = random_maps(&cfg, &mut rng);
        let pt = compressed_point(&cfg, &a).unwrap();
        assert!(graphs_nested(&cfg, &pt));
        assert!(is_gcal(&cfg, &pt) && in_u(&cfg, &pt));
        let flag = psi_tilde(&cfg, &pt).unwrap();
        assert_eq!(flag, psi_of_maps(&cfg, &a).unwrap());
        for (i, w) in flag.spaces.iter().enumerate() {
            assert_eq!(w.dim(), cfg.multi_index().at(i + 1));
        }
    }
}

fn random_flag(n: usize, beta: &[usize], f: Fp, rng: &mut ChaCha8Rng) -> PartialFlag {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    while rows.len() < n {
        let v: Vec<u8> = (0..n).map(|_| rng.gen_range(0..f.p()) as u8).collect();
        let mut cand = rows.clone();
        cand.push(v);
        if Subspace::span(&cand, n, f).unwrap().dim() == cand.len() {
            rows = cand;
        }
    }
    PartialFlag {
        spaces: beta.iter().map(|&b| Subspace::span(&rows[..b], n, f).unwrap()).collect(),
    }
}

#[test]
fn kl_fiber_is_flag_independent() {
    let f = Fp::new(3).unwrap();
    let cfg = make_frame(5, f, &[2, 4, 5], None).unwrap();
    let expected = kl_count(cfg.multi_index(), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..12 {
        let flag = random_flag(5, &[2, 4, 5], f, &mut rng);
        let pts = kl_points(&flag, DEFAULT_BUDGET).unwrap();
        assert_eq!(pts.len() as u128, expected);
        for pt in &pts {
            let top = pt.top();
            for (i, w) in flag.spaces.iter().enumerate() {
                assert!(top.intersect(w).unwrap().dim() > i);
            }
        }
    }
}

#[test]
fn u_excludes_some_points() {
    let cfg = make_frame(4, Fp::new(2).unwrap(), &[1, 3], None).unwrap();
    let gcal = enumerate_gcal(&cfg, DEFAULT_BUDGET).unwrap();
    let zero = GCalPoint {
        spaces: vec![cfg.line_sum(1..=1), cfg.line_sum(1..=2)],
    };
    assert!(gcal.contains(&zero) && in_u(&cfg, &zero));
    let outside: Vec<&GCalPoint> = gcal.iter().filter(|p| !in_u(&cfg, p)).collect();
    assert!(!outside.is_empty());
    // Off U the top space misses L_1 + G^{β_2} in a line.
    for p in outside {
        assert_ne!(p.get(2).intersect(&cfg.v(1, 2)).unwrap().dim(), 1);
    }
}
