use proptest::prelude::*;

use ringoid::exactla::{image_basis, kernel_basis, rref, solve, Matrix, PrimeField, Subspace};
use ringoid::fincat::{catalog, catalog_names, parse_quiver_dsl, path_category, to_json, FinCat};

fn field() -> impl Strategy<Value = PrimeField> {
    prop_oneof![Just(2u32), Just(3), Just(5)].prop_map(|p| PrimeField::new(p).unwrap())
}

fn matrix_in(f: PrimeField, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(0..f.p(), rows * cols).prop_map(move |d| Matrix::from_flat(f, rows, cols, d).unwrap())
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (field(), 0usize..6, 0usize..6).prop_flat_map(|(f, r, c)| matrix_in(f, r, c))
}

/// Three subspaces of a common `F_p^n`.
fn triple() -> impl Strategy<Value = (Subspace, Subspace, Subspace)> {
    (field(), 1usize..6).prop_flat_map(|(f, n)| {
        let sub = move || (0usize..=n).prop_flat_map(move |k| matrix_in(f, k, n)).prop_map(|m| Subspace::row_space(&m));
        (sub(), sub(), sub())
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let r = rref(&m);
        prop_assert_eq!(rref(&r), r.clone());
        prop_assert_eq!(Subspace::row_space(&r), Subspace::row_space(&m));
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let k = kernel_basis(&m).unwrap();
        let i = image_basis(&m).unwrap();
        prop_assert_eq!(k.dim() + i.dim(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_is_sound(m in matrix(), seed in any::<u64>()) {
        let f = m.field();
        let x: Vec<u32> = (0..m.cols()).map(|i| ((seed >> (i * 3)) as u32) % f.p()).collect();
        let v = m.apply(&x);
        let y = solve(&m, &v).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.apply(&y), v);
    }

    #[test]
    fn modular_law((u, v, w) in triple()) {
        // U ≤ W implies U + (V ∩ W) = (U + V) ∩ W.
        let u = u.intersect(&w).unwrap();
        let left = u.sum(&v.intersect(&w).unwrap()).unwrap();
        let right = u.sum(&v).unwrap().intersect(&w).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn dimension_formula((u, v, _) in triple()) {
        let s = u.sum(&v).unwrap().dim();
        let i = u.intersect(&v).unwrap().dim();
        prop_assert_eq!(s + i, u.dim() + v.dim());
    }

    #[test]
    fn loop_quiver_is_truncated_polynomials(n in 1usize..6, p in prop_oneof![Just(2u32), Just(3)]) {
        let word = vec!["x"; n].join("*");
        let q = parse_quiver_dsl(&format!("vertices v; arrow x: v -> v; relation {word}; field {p}; maxlen {n};")).unwrap();
        let from_quiver = path_category(&q).unwrap();
        let mult: Vec<Vec<Vec<u32>>> = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| u32::from(i + j == k)).collect()).collect())
            .collect();
        let mut unit = vec![0; n];
        unit[0] = 1;
        let ring = FinCat::from_ring_table(p, n, &mult, &unit).unwrap();
        // Identity on bases: same tables up to the object name.
        let rename = |c: &FinCat| c.clone().with_object_names(vec!["v".into()]).unwrap();
        prop_assert_eq!(to_json(&rename(&from_quiver)), to_json(&rename(&ring)));
    }
}

#[test]
fn opposite_is_an_involution() {
    for name in catalog_names() {
        for p in [2, 3] {
            let c = catalog(&format!("{name}({p})")).unwrap();
            assert!(c.validate().is_valid(), "{name}({p})");
            let op = c.opposite();
            assert!(op.validate().is_valid(), "{name}({p})^op");
            assert_eq!(to_json(&op.opposite()), to_json(&c), "{name}({p})");
        }
    }
}
