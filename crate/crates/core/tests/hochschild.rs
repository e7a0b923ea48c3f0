mod common;

use common::hh_oracle::{self, Truncated};
use loopforge::exactq::{multi_indices, q, sign, Matrix, MultilinearMap, Rational};
use loopforge::hochschild::{
    bracket, bracket_table, coboundary, cup, cup_table, hochschild_cohomology, hochschild_homology, ChainComplex,
    Cochain, CochainComplex, DGAlgebra, DGBimodule, HochschildError, DEFAULT_TRUNCATION,
};
use loopforge::io::StructureConstants;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIXTURES: &[&str] = &[
    "ground_field.json",
    "dual_numbers.json",
    "exterior1.json",
    "dg_acyclic.json",
    "m2q.json",
];

fn algebra(name: &str) -> DGAlgebra {
    DGAlgebra::from_constants(&StructureConstants::parse(&common::fixture(name)).unwrap()).unwrap()
}

fn dims(a: &DGAlgebra, m: &DGBimodule, hi: i64) -> Vec<usize> {
    let r = hochschild_homology(a, m, DEFAULT_TRUNCATION, 0..=hi).unwrap();
    assert!(r.stable);
    r.dims_in_order()
}

/// Random homogeneous cochain `A^{⊗n} → A` of internal degree `p`.
fn random_cochain(rng: &mut ChaCha8Rng, a: &DGAlgebra, n: usize, p: i64) -> MultilinearMap {
    let sp = a.space().clone();
    let d = sp.dim();
    let mut entries = Vec::new();
    for inputs in multi_indices(&vec![d; n]) {
        let s: i64 = inputs.iter().map(|&i| sp.degree(i)).sum();
        for out in 0..d {
            if sp.degree(out) - s == p && rng.gen_bool(0.6) {
                entries.push((inputs.clone(), out, q(rng.gen_range(-3..=3))));
            }
        }
    }
    MultilinearMap::new(vec![sp.clone(); n], sp, p, entries).unwrap()
}

#[test]
fn fixtures_are_dg_algebras_and_duals_are_bimodules() {
    for name in FIXTURES {
        let a = algebra(name);
        DGBimodule::dual(&a).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    let nonassoc = StructureConstants::parse(
        r#"{"basis": [{"name": "1", "degree": 0}, {"name": "a", "degree": 0}, {"name": "b", "degree": 0}],
            "product": [[0, 0, [1, 0, 0]], [0, 1, [0, 1, 0]], [0, 2, [0, 0, 1]], [1, 0, [0, 1, 0]],
                        [2, 0, [0, 0, 1]], [1, 1, [0, 0, 1]], [2, 1, [0, 1, 0]]],
            "unit": [1, 0, 0]}"#,
    )
    .unwrap();
    match DGAlgebra::from_constants(&nonassoc) {
        Err(HochschildError::Axiom { axiom, witness }) => {
            assert_eq!(axiom, "associativity");
            assert_eq!(witness, ["a", "a", "a"]);
        }
        other => panic!("{other:?}"),
    }
    let not_square_zero = StructureConstants::parse(
        r#"{"basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": -1}, {"name": "y", "degree": -2}],
            "product": [[0, 0, [1, 0, 0]], [0, 1, [0, 1, 0]], [0, 2, [0, 0, 1]], [1, 0, [0, 1, 0]], [2, 0, [0, 0, 1]]],
            "unit": [1, 0, 0], "differential": [[1, [1, 0, 0]], [2, [0, 1, 0]]]}"#,
    )
    .unwrap();
    match DGAlgebra::from_constants(&not_square_zero) {
        Err(HochschildError::Axiom { axiom, witness }) => {
            assert_eq!(axiom, "d² = 0");
            assert_eq!(witness, ["y"]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn boundary_squares_to_zero_up_to_length_four() {
    for name in FIXTURES {
        let a = algebra(name);
        for m in [DGBimodule::regular(&a), DGBimodule::dual(&a).unwrap()] {
            let cx = ChainComplex::new(&m, 4, -6..=10);
            for t in -4..=10 {
                let (d1, d2) = (cx.matrix(t - 1).unwrap(), cx.matrix(t).unwrap());
                assert!((&d1 * &d2).is_zero(), "{name} degree {t}");
                let (b1, b2) = (cx.hochschild_matrix(t - 1).unwrap(), cx.hochschild_matrix(t).unwrap());
                assert!((&b1 * &b2).is_zero(), "{name} degree {t}");
            }
        }
    }
}

#[test]
fn examples_of_the_boundary() {
    let a = algebra("dual_numbers.json");
    let cx = ChainComplex::new(&DGBimodule::regular(&a), 2, 0..=2);
    // x ⊗ x ↦ x² − x² = 0 and 1 ⊗ x ↦ x − x = 0
    assert!(cx.hochschild_boundary_basis(&[1, 1]).is_empty());
    assert!(cx.hochschild_boundary_basis(&[0, 1]).is_empty());
    // 1 ⊗ x ⊗ x ↦ x ⊗ x − 1 ⊗ 0 + x ⊗ x
    let b = cx.hochschild_boundary_basis(&[0, 1, 1]);
    assert_eq!(b.into_iter().collect::<Vec<_>>(), vec![(vec![1, 1], q(2))]);
    let k = algebra("ground_field.json");
    let cx = ChainComplex::new(&DGBimodule::regular(&k), 2, 0..=2);
    assert!(cx.hochschild_boundary_basis(&[0, 0]).is_empty());
    assert_eq!(cx.hochschild_boundary_basis(&[0, 0, 0]).into_iter().collect::<Vec<_>>(), vec![(vec![0, 0], q(1))]);
}

#[test]
fn coboundary_squares_to_zero_up_to_length_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in FIXTURES {
        let a = algebra(name);
        for m in [DGBimodule::regular(&a), DGBimodule::dual(&a).unwrap()] {
            let cx = CochainComplex::new(&m, 4, -6..=8);
            for k in -5..=7 {
                let (d1, d2) = (cx.matrix(k - 1).unwrap(), cx.matrix(k).unwrap());
                assert!((&d2 * &d1).is_zero(), "{name} degree {k}");
            }
        }
        // directly on maps, with no truncation involved
        let m = DGBimodule::regular(&a);
        for n in 0..=3 {
            for p in -1..=1 {
                let f = random_cochain(&mut rng, &a, n, p);
                assert!(coboundary(&m, &coboundary(&m, &f).unwrap()).unwrap().is_zero(), "{name}");
            }
        }
    }
}

/// Sign of the evaluation pairing `⟨f, c ⊗ a_1 ⊗ … ⊗ a_n⟩`: the Koszul sign
/// `(−1)^{|c|·s}` from moving `c` past the inputs, `s = |a_1| + … + |a_n|`,
/// times `(−1)^{σ(σ−1)/2}` with `σ = |c| + s`, which absorbs the sign of the
/// dual differential.
fn pairing_signs(a: &DGAlgebra, basis: &[Vec<usize>]) -> Matrix {
    let deg = |i: usize| a.space().degree(i);
    let n = basis.len();
    Matrix::from_fn(n, n, |i, j| {
        if i != j {
            return q(0);
        }
        let key = &basis[i];
        let (c, s) = (deg(key[0]), key[1..].iter().map(|&k| deg(k)).sum::<i64>());
        let sigma = c + s;
        sign(c * s + sigma * (sigma - 1) / 2)
    })
}

#[test]
fn cochains_are_dual_to_chains() {
    for name in FIXTURES {
        let a = algebra(name);
        let chains = ChainComplex::new(&DGBimodule::regular(&a), 5, -6..=6);
        let cochains = CochainComplex::new(&DGBimodule::dual(&a).unwrap(), 5, -6..=6);
        for k in -6..6 {
            assert_eq!(cochains.basis(k), chains.basis(k), "{name}: bases of degree {k} correspond");
            if (0..a.space().dim()).all(|i| a.space().degree(i) == 0) {
                assert_eq!(cochains.matrix(k).unwrap(), chains.matrix(k + 1).unwrap().transpose(), "{name}");
            }
            let (s, t) = (pairing_signs(&a, chains.basis(k)), pairing_signs(&a, chains.basis(k + 1)));
            assert_eq!(
                cochains.matrix(k).unwrap(),
                &(&t * &chains.matrix(k + 1).unwrap().transpose()) * &s,
                "{name} degree {k}"
            );
        }
    }
}

#[test]
fn homology_of_small_algebras() {
    let k = algebra("ground_field.json");
    assert_eq!(dims(&k, &DGBimodule::regular(&k), 3), vec![1, 0, 0, 0]);
    let a = algebra("dual_numbers.json");
    let r = hochschild_homology(&a, &DGBimodule::regular(&a), DEFAULT_TRUNCATION, 0..=3).unwrap();
    assert_eq!(r.dims_in_order(), vec![2, 1, 1, 1]);
    assert!(r.stable);
    assert_eq!(
        r.dims_in_order(),
        hh_oracle::homology(Truncated { top: 1, weight: 0 }, 3)
    );
    let e = algebra("exterior1.json");
    assert_eq!(
        dims(&e, &DGBimodule::regular(&e), 5),
        hh_oracle::homology(Truncated { top: 1, weight: 1 }, 5)
    );
    // quasi-isomorphic to the ground field
    let z = algebra("dg_acyclic.json");
    assert_eq!(dims(&z, &DGBimodule::regular(&z), 4), vec![1, 0, 0, 0, 0]);
    // M_2(ℚ) is Morita equivalent to ℚ
    let m2 = algebra("m2q.json");
    assert_eq!(dims(&m2, &DGBimodule::regular(&m2), 2), vec![1, 0, 0]);
}

#[test]
fn truncation_guard() {
    let a = algebra("dual_numbers.json");
    let m = DGBimodule::regular(&a);
    assert!(matches!(
        hochschild_homology(&a, &m, 3, 0..=3),
        Err(HochschildError::TruncationTooSmall { needed: 4, .. })
    ));
    assert!(hochschild_homology(&a, &m, 4, 0..=3).is_ok());
    assert!(matches!(
        hochschild_cohomology(&a, &m, 8, 3..=1),
        Err(HochschildError::EmptyWindow)
    ));
}

/// `dim Z(A)` and `dim A/[A, A]` by direct linear algebra on the structure
/// constants.
fn center_and_cocenter(a: &DGAlgebra) -> (usize, usize) {
    let d = a.space().dim();
    let p = a.product();
    // z is central iff Σ_k z_k (e_i e_k − e_k e_i) = 0 for all i
    let mut rows = Vec::new();
    for i in 0..d {
        for r in 0..d {
            rows.push((0..d).map(|k| &p.eval_basis(&[i, k])[r] - &p.eval_basis(&[k, i])[r]).collect());
        }
    }
    let center = d - Matrix::from_rows(rows).unwrap().rank();
    let mut comms = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (p.eval_basis(&[i, j]), p.eval_basis(&[j, i]));
            comms.push(x.iter().zip(&y).map(|(s, t)| s - t).collect());
        }
    }
    (center, d - Matrix::from_rows(comms).unwrap().rank())
}

/// `dim Der(A) − dim Inn(A)` for an ungraded algebra.
fn outer_derivations(a: &DGAlgebra) -> usize {
    let d = a.space().dim();
    let p = a.product();
    // unknowns D_{kr}: D(e_k) = Σ_r D_{kr} e_r
    let var = |k: usize, r: usize| k * d + r;
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for out in 0..d {
                let mut row = vec![Rational::zero(); d * d];
                for (k, c) in p.eval_basis(&[i, j]).iter().enumerate() {
                    row[var(k, out)] += c;
                }
                for r in 0..d {
                    row[var(i, r)] -= &p.eval_basis(&[r, j])[out];
                    row[var(j, r)] -= &p.eval_basis(&[i, r])[out];
                }
                rows.push(row);
            }
        }
    }
    let der = d * d - Matrix::from_rows(rows).unwrap().rank();
    let (center, _) = center_and_cocenter(a);
    der - (d - center)
}

#[test]
fn low_degrees_match_direct_solves() {
    for name in ["ground_field.json", "dual_numbers.json", "m2q.json", "truncated_cubic.json", "idempotent_pair.json"] {
        let a = algebra(name);
        let m = DGBimodule::regular(&a);
        let (center, cocenter) = center_and_cocenter(&a);
        let hh = hochschild_homology(&a, &m, 3, 0..=0).unwrap();
        assert_eq!(hh.dims[&0], cocenter, "{name}");
        let coh = hochschild_cohomology(&a, &m, 3, 0..=1).unwrap();
        assert_eq!(coh.dims[&0], center, "{name}");
        assert_eq!(coh.dims[&1], outer_derivations(&a), "{name}");
    }
}

#[test]
fn cohomology_with_dual_coefficients_mirrors_homology() {
    for name in ["dual_numbers.json", "exterior1.json", "dg_acyclic.json"] {
        let a = algebra(name);
        let h = hochschild_homology(&a, &DGBimodule::regular(&a), 6, 0..=4).unwrap();
        let c = hochschild_cohomology(&a, &DGBimodule::dual(&a).unwrap(), 6, 0..=4).unwrap();
        assert_eq!(h.dims, c.dims, "{name}");
        assert!(c.stable);
    }
    let k = algebra("ground_field.json");
    let r = hochschild_cohomology(&k, &DGBimodule::regular(&k), 4, 0..=3).unwrap();
    assert_eq!(r.dims_in_order(), vec![1, 0, 0, 0]);
    let a = algebra("dual_numbers.json");
    let r = hochschild_cohomology(&a, &DGBimodule::regular(&a), 4, 0..=0).unwrap();
    assert_eq!(r.dims[&0], 2);
}

fn total_degree(f: &MultilinearMap) -> i64 {
    f.arity() as i64 + f.degree()
}

#[test]
fn coboundary_is_a_derivation_of_cup() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for name in ["dual_numbers.json", "exterior1.json", "dg_acyclic.json", "m2q.json"] {
        let a = algebra(name);
        let m = DGBimodule::regular(&a);
        let one = a.unit_cochain();
        for _ in 0..6 {
            let (n1, n2) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
            let p1 = rng.gen_range(-1..=0);
            let f = random_cochain(&mut rng, &a, n1, p1);
            let p2 = rng.gen_range(-1..=0);
            let g = random_cochain(&mut rng, &a, n2, p2);
            assert_eq!(cup(&a, &one, &f).unwrap(), Cochain::from(&f));
            assert_eq!(cup(&a, &f, &one).unwrap(), Cochain::from(&f));
            let lhs = coboundary(&m, &cup(&a, &f, &g).unwrap()).unwrap();
            let rhs = cup(&a, &coboundary(&m, &f).unwrap(), &g)
                .unwrap()
                .add(&cup(&a, &f, &coboundary(&m, &g).unwrap()).unwrap().scale(&sign(total_degree(&f))))
                .unwrap();
            assert_eq!(lhs, rhs, "{name}");
            let h = random_cochain(&mut rng, &a, 1, 0);
            let l = cup(&a, &cup(&a, &f, &g).unwrap(), &h).unwrap();
            let r = cup(&a, &f, &cup(&a, &g, &h).unwrap()).unwrap();
            assert_eq!(l, r, "{name}: cup is associative");
        }
    }
}

#[test]
fn coboundary_is_a_bracket_with_the_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["dual_numbers.json", "m2q.json", "truncated_cubic.json"] {
        let a = algebra(name);
        let m = DGBimodule::regular(&a);
        for n in 0..=3 {
            let f = random_cochain(&mut rng, &a, n, 0);
            let via_bracket = bracket(&a, a.product(), &f).unwrap().scale(&sign(n as i64 - 1));
            assert_eq!(coboundary(&m, &f).unwrap(), Cochain::from(via_bracket), "{name} n={n}");
        }
    }
}

#[test]
fn self_bracket_vanishes_exactly_for_associative_products() {
    for name in ["dual_numbers.json", "m2q.json", "truncated_cubic.json"] {
        let a = algebra(name);
        assert!(bracket(&a, a.product(), a.product()).unwrap().is_zero());
    }
    let a = algebra("m2q.json");
    let sp = a.space().clone();
    let d = sp.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut seen = [0usize; 2];
    for trial in 0..20 {
        let perturbed = if trial % 2 == 0 {
            // a random sparse bilinear perturbation
            let mut entries = Vec::new();
            for _ in 0..rng.gen_range(1..=3) {
                let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                entries.push((vec![i, j], k, q(rng.gen_range(-2..=2))));
            }
            let r = MultilinearMap::new(vec![sp.clone(); 2], sp.clone(), 0, entries).unwrap();
            a.product().add(&r).unwrap()
        } else {
            // transport of structure along a random invertible T: T⁻¹ m(Tx, Ty)
            let t = loop {
                let t = Matrix::from_fn(d, d, |_, _| q(rng.gen_range(-2..=2)));
                if t.determinant().is_some_and(|x| !x.is_zero()) {
                    break t;
                }
            };
            let ti = t.inverse().unwrap();
            let t = MultilinearMap::from_linear(sp.clone(), sp.clone(), 0, &t).unwrap();
            let ti = MultilinearMap::from_linear(sp.clone(), sp.clone(), 0, &ti).unwrap();
            ti.compose(1, a.product()).unwrap().compose(1, &t).unwrap().compose(2, &t).unwrap()
        };
        // associativity checked on basis triples without any composition
        let mul = |x: &[Rational], y: &[Rational]| perturbed.apply(&[x.to_vec(), y.to_vec()]);
        let e = |i: usize| (0..d).map(|k| if k == i { q(1) } else { q(0) }).collect::<Vec<_>>();
        let associative = (0..d).all(|i| {
            (0..d).all(|j| (0..d).all(|k| mul(&mul(&e(i), &e(j)), &e(k)) == mul(&e(i), &mul(&e(j), &e(k)))))
        });
        let b = bracket(&a, &perturbed, &perturbed).unwrap();
        assert_eq!(b.is_zero(), associative, "trial {trial}");
        seen[associative as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn bracket_identities() {
    let a = algebra("dual_numbers.json");
    let one = a.unit_cochain();
    assert!(bracket(&a, a.product(), &one).unwrap().is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let shifted = |f: &MultilinearMap| f.arity() as i64 - 1;
    for _ in 0..10 {
        let fs: Vec<MultilinearMap> = (0..3)
            .map(|_| {
                let n = rng.gen_range(0..=2);
                random_cochain(&mut rng, &a, n, 0)
            })
            .collect();
        let (f, g, h) = (&fs[0], &fs[1], &fs[2]);
        // graded skew symmetry
        let fg = bracket(&a, f, g).unwrap();
        let gf = bracket(&a, g, f).unwrap();
        if fg.arity() == gf.arity() {
            assert_eq!(fg, gf.scale(&-sign(shifted(f) * shifted(g))));
        }
        // graded Jacobi
        let term = |x: &MultilinearMap, y: &MultilinearMap, z: &MultilinearMap| {
            let inner = bracket(&a, y, z).unwrap();
            bracket(&a, x, &inner).unwrap().scale(&sign(shifted(x) * shifted(z)))
        };
        if f.arity() + g.arity() + h.arity() >= 2 {
            let s = term(f, g, h).add(&term(g, h, f)).unwrap().add(&term(h, f, g)).unwrap();
            assert!(s.is_zero());
        }
    }
}

#[test]
fn cup_square_of_the_degree_two_class() {
    let a = algebra("dual_numbers.json");
    let m = DGBimodule::regular(&a);
    let sp = a.space().clone();
    // φ(x, x) = 1, zero on every other basis pair
    let phi = MultilinearMap::new(vec![sp.clone(); 2], sp.clone(), 0, [(vec![1, 1], 0, q(1))]).unwrap();
    assert!(coboundary(&m, &phi).unwrap().is_zero());
    // D(x) = x spans the outer derivations; its cup square vanishes already on cochains
    let der = MultilinearMap::new(vec![sp.clone()], sp.clone(), 0, [(vec![1], 1, q(1))]).unwrap();
    assert!(coboundary(&m, &der).unwrap().is_zero());
    assert!(cup(&a, &der, &der).unwrap().is_zero());
    let cx = CochainComplex::new(&m, 5, 0..=5);
    let nonzero_class = |k: i64, f: &Cochain| {
        let v = cx.coordinates(k, f).unwrap();
        let image = cx.matrix(k - 1).unwrap();
        let mut cols: Vec<Vec<Rational>> = (0..image.cols()).map(|c| image.column(c)).collect();
        let before = Matrix::from_columns(image.rows(), &cols).rank();
        cols.push(v);
        Matrix::from_columns(image.rows(), &cols).rank() > before
    };
    assert!(nonzero_class(2, &Cochain::from(&phi)));
    let square = cup(&a, &phi, &phi).unwrap();
    assert!(coboundary(&m, &square).unwrap().is_zero());
    assert!(nonzero_class(4, &square));
    let mixed = cup(&a, &der, &phi).unwrap();
    assert!(nonzero_class(3, &mixed));
}





/// Bracket of two cochains, each possibly a sum of components.
fn bracket_all(a: &DGAlgebra, f: &Cochain, g: &Cochain) -> Cochain {
    let mut out = Cochain::zero();
    for x in f.parts() {
        for y in g.parts() {
            out = out.add(&Cochain::from(bracket(a, x, y).unwrap())).unwrap();
        }
    }
    out
}

#[test]
fn gerstenhaber_identities_hold_on_cohomology() {
    for name in ["dual_numbers.json", "truncated_cubic.json"] {
        let a = algebra(name);
        let m = DGBimodule::regular(&a);
        let cx = CochainComplex::new(&m, 4, -1..=4);
        let bases: Vec<Vec<Vec<Rational>>> = (0..=3).map(|k| cx.cohomology_basis(k)).collect();
        let classes = |k: i64| -> Vec<Cochain> { bases[k as usize].iter().map(|v| cx.cochain(k, v)).collect() };
        let is_exact = |k: i64, f: &Cochain| {
            let c = cx.class_coordinates(k, &bases[k as usize], f).expect("a cocycle");
            c.iter().all(|x| x.is_zero())
        };
        let mut checked = 0;
        for p in 0..=2i64 {
            for q in 0..=(3 - p).min(2) {
                for f in classes(p) {
                    for g in classes(q) {
                        let fg = cup(&a, &f, &g).unwrap();
                        let gf = cup(&a, &g, &f).unwrap();
                        assert!(is_exact(p + q, &fg.sub(&gf.scale(&sign(p * q))).unwrap()), "{name}: ∪ commutes");
                        if p + q >= 1 {
                            let fg = bracket_all(&a, &f, &g);
                            let gf = bracket_all(&a, &g, &f);
                            let skew = fg.add(&gf.scale(&sign((p - 1) * (q - 1)))).unwrap();
                            assert!(is_exact(p + q - 1, &skew), "{name}: bracket is skew");
                        }
                        for r in 0..=(3 - p - q).min(1) {
                            if p + q + r < 1 {
                                continue;
                            }
                            for h in classes(r) {
                                let lhs = bracket_all(&a, &f, &cup(&a, &g, &h).unwrap());
                                let rhs = cup(&a, &bracket_all(&a, &f, &g), &h)
                                    .unwrap()
                                    .add(&cup(&a, &g, &bracket_all(&a, &f, &h)).unwrap().scale(&sign((p - 1) * q)))
                                    .unwrap();
                                assert!(is_exact(p + q + r - 1, &lhs.sub(&rhs).unwrap()), "{name}: Leibniz");
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn product_tables_on_the_dual_numbers() {
    let a = algebra("dual_numbers.json");
    let zero_two = cup_table(&a, 6, 0, 2).unwrap();
    // HH^0 = A acts on HH^2 ≅ ℚ through A → A/(x)
    assert_eq!(zero_two.entries.len(), 2);
    let action: Vec<Vec<Rational>> = zero_two.entries.iter().map(|row| row[0].clone()).collect();
    assert_eq!(Matrix::from_rows(action).unwrap().rank(), 1);
    let nonzero = |v: &Vec<Rational>| v.iter().any(|x| !x.is_zero());
    let two_two = cup_table(&a, 6, 2, 2).unwrap();
    assert!(nonzero(&two_two.entries[0][0]));
    let br = bracket_table(&a, 6, 1, 1).unwrap();
    assert_eq!(br.degrees, (1, 1, 1));
    assert!(br.entries.iter().flatten().all(|v| !nonzero(v)), "HH^1 is one-dimensional");
    let graded = algebra("exterior1.json");
    assert!(matches!(bracket_table(&graded, 6, 1, 1), Err(HochschildError::Graded)));
}
