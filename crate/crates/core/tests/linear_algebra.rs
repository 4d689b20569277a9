use proptest::prelude::*;

use schubres::exactlin::{canonical_complement, graph, project, rref, Fp, LinearMap, Matrix, Subspace};

const PRIMES: [u32; 4] = [2, 3, 5, 7];

fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = (Fp, Matrix)> {
    prop::collection::vec(0..p as u8, rows * cols).prop_map(move |entries| {
        let rows: Vec<&[u8]> = entries.chunks(cols).collect();
        (Fp::new(p).unwrap(), Matrix::from_rows(cols, &rows))
    })
}

fn field_and_spaces() -> impl Strategy<Value = (Fp, Subspace, Subspace)> {
    (prop::sample::select(&PRIMES[..]), 1usize..=5).prop_flat_map(|(p, n)| {
        (matrix(p, 3, n), matrix(p, 3, n)).prop_map(|((f, a), (_, b))| {
            (f, Subspace::from_matrix(&a, f), Subspace::from_matrix(&b, f))
        })
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent((f, m) in (prop::sample::select(&PRIMES[..]), 1usize..=5, 1usize..=6)
        .prop_flat_map(|(p, r, c)| matrix(p, r, c)))
    {
        let (r1, piv1) = rref(&m, f);
        let (r2, piv2) = rref(&r1, f);
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(piv1, piv2);
    }

    #[test]
    fn dimension_formula((_, a, b) in field_and_spaces()) {
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
        prop_assert!(sum.contains(&a).unwrap() && a.contains(&meet).unwrap() && b.contains(&meet).unwrap());
    }

    #[test]
    fn complement_and_projection((_, a, b) in field_and_spaces()) {
        let outer = a.sum(&b).unwrap();
        let comp = canonical_complement(&a, &outer).unwrap();
        prop_assert!(comp.intersect(&a).unwrap().is_zero());
        prop_assert_eq!(comp.sum(&a).unwrap(), outer.clone());
        let f = a.field();
        for v in outer.vectors().take(50) {
            let on = project(&v, &a, &comp).unwrap();
            let rest: Vec<u8> = v.iter().zip(&on).map(|(&x, &y)| f.sub(x, y)).collect();
            prop_assert!(a.contains_vector(&on).unwrap());
            prop_assert!(comp.contains_vector(&rest).unwrap());
        }
    }

    #[test]
    fn graphs_meet_target_trivially((f, m) in (prop::sample::select(&PRIMES[..])).prop_flat_map(|p| matrix(p, 3, 2))) {
        let domain = Subspace::coordinate(5, f, 0..2);
        let target = Subspace::coordinate(5, f, 2..5);
        let a = LinearMap::from_matrix(domain.clone(), target.clone(), m).unwrap();
        let g = graph(&a).unwrap();
        prop_assert_eq!(g.dim(), 2);
        prop_assert!(g.intersect(&target).unwrap().is_zero());
        prop_assert_eq!(g.sum(&target).unwrap(), domain.sum(&target).unwrap());
    }
}
