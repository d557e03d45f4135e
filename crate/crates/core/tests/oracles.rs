//! Fixed values and independent oracles for every public operation.
//!
//! The oracles deliberately avoid the code paths they check: discriminants
//! are compared with root products, subdiscriminants with sums over root
//! subsets, resultants with products of evaluations.

use std::collections::HashMap;

use dplus::multipoly::elementary_symmetric;
use dplus::rational::{frac, int};
use dplus::resultant::{self, PolyMatrix};
use dplus::{dplus as dp, gist, poisson, MultiPoly, MultiplicityVector, Rational, UniPoly, VarTable};
use num_traits::{One, Zero};

fn mu(parts: &[usize]) -> MultiplicityVector {
    MultiplicityVector::new(parts.to_vec()).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn c_vars(n: usize) -> dplus::Vars {
    resultant::coefficient_vars(n)
}

fn point(names: &[&str], values: &[Rational]) -> HashMap<String, Rational> {
    names.iter().map(|s| s.to_string()).zip(values.iter().cloned()).collect()
}

/// `a0^{2n-2} prod_{i<j} (x_i - x_j)^2` over the roots listed with
/// multiplicity.
fn discriminant_from_roots(leading: &Rational, roots: &[Rational]) -> Rational {
    let n = roots.len();
    let mut v = dplus::rational::pow(leading, 2 * n - 2);
    for i in 0..n {
        for j in i + 1..n {
            let d = &roots[i] - &roots[j];
            v *= &d * &d;
        }
    }
    v
}

fn coefficients_of_roots(leading: &Rational, roots: &[Rational]) -> Vec<Rational> {
    let pairs: Vec<(Rational, usize)> = roots.iter().map(|r| (r.clone(), 1)).collect();
    UniPoly::from_roots(&pairs, leading).coeffs().to_vec()
}

fn eval_generic(poly: &MultiPoly, coeffs: &[Rational]) -> Rational {
    poly.evaluate_at(coeffs).unwrap()
}

#[test]
fn symbolic_discriminant_matches_root_products() {
    let cases: &[(i64, &[i64])] = &[
        (1, &[1, 2]),
        (3, &[-1, 4]),
        (2, &[1, 1, 3]),
        (-1, &[0, 2, 5]),
        (2, &[1, -1, 2, 3]),
        (1, &[3, 3, -2, 0]),
        (1, &[1, 2, 3, 4, 5]),
        (5, &[-2, 0, 1, 7, 7]),
        (1, &[1, -1, 2, -2, 3, 0]),
    ];
    for (lead, roots) in cases {
        let lead = int(*lead);
        let roots = ints(roots);
        let d = resultant::discriminant_symbolic(roots.len()).unwrap();
        let coeffs = coefficients_of_roots(&lead, &roots);
        assert_eq!(eval_generic(&d, &coeffs), discriminant_from_roots(&lead, &roots), "{roots:?}");
    }
}

#[test]
fn quadratic_discriminant_by_hand() {
    let v = c_vars(2);
    let c = |s: &str| MultiPoly::var(&v, s).unwrap();
    let want = c("c1").pow(2) - (c("c0") * c("c2")).scale(&int(4));
    assert_eq!(*resultant::discriminant_symbolic(2).unwrap(), want);
}

#[test]
fn quartic_discriminant_is_homogeneous_of_degree_six() {
    let d = resultant::discriminant_symbolic(4).unwrap();
    assert!(d.terms().all(|(m, _)| m.degree() == 6));
}

#[test]
fn sylvester_layout_and_determinants() {
    let v = VarTable::new(["t"]).unwrap();
    let k = |x: i64| MultiPoly::constant(&v, int(x));
    let m = resultant::sylvester_matrix(&[k(1), k(0), k(-1)], &[k(1), k(-2)]).unwrap();
    let want = [[1, 0, -1], [1, -2, 0], [0, 1, -2]];
    for (r, row) in want.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            assert_eq!(*m.get(r, c), k(*x));
        }
    }
    assert_eq!(m.determinant().unwrap(), k(3));
    // res(x^2 - 1, x - 2) = B(1) B(-1) = (-1)(-3)
    assert_eq!(resultant::resultant(&[k(1), k(0), k(-1)], &[k(1), k(-2)]).unwrap(), k(3));

    let ab = VarTable::new(["a", "b", "c", "d"]).unwrap();
    let x = |s: &str| MultiPoly::var(&ab, s).unwrap();
    let m = PolyMatrix::new(2, 2, vec![x("a"), x("b"), x("c"), x("d")]).unwrap();
    assert_eq!(m.determinant().unwrap(), x("a") * x("d") - x("b") * x("c"));
    let one = MultiPoly::one(&ab);
    let zero = MultiPoly::zero(&ab);
    let ident: Vec<MultiPoly> = (0..9).map(|i| if i % 4 == 0 { one.clone() } else { zero.clone() }).collect();
    assert_eq!(PolyMatrix::new(3, 3, ident).unwrap().determinant().unwrap(), one);
}

#[test]
fn linear_resultant_and_symbolic_cubic_layout() {
    let v = VarTable::new(["a0", "a1", "b0", "b1"]).unwrap();
    let x = |s: &str| MultiPoly::var(&v, s).unwrap();
    let res = resultant::resultant(&[x("a0"), x("a1")], &[x("b0"), x("b1")]).unwrap();
    assert_eq!(res, x("a0") * x("b1") - x("a1") * x("b0"));

    let cv = c_vars(3);
    let (p, dp) = resultant::generic_poly_and_derivative(&cv, 3).unwrap();
    let m = resultant::sylvester_matrix(&p, &dp).unwrap();
    assert_eq!((m.rows(), m.cols()), (5, 5));
    let d = m.determinant().unwrap();
    let c0 = MultiPoly::var(&cv, "c0").unwrap();
    // D = (-1)^{3} res / c0
    assert_eq!(-d.exact_div(&c0).unwrap(), *resultant::discriminant_symbolic(3).unwrap());
}

/// `sum over (n-j)-subsets I of prod_{i<k in I} (x_i - x_k)^2`.
fn subdiscriminant_from_roots(roots: &[Rational], size: usize) -> Rational {
    fn rec(roots: &[Rational], size: usize, start: usize, chosen: &mut Vec<usize>, acc: &mut Rational) {
        if chosen.len() == size {
            let mut v = Rational::one();
            for a in 0..chosen.len() {
                for b in a + 1..chosen.len() {
                    let d = &roots[chosen[a]] - &roots[chosen[b]];
                    v *= &d * &d;
                }
            }
            *acc += v;
            return;
        }
        for i in start..roots.len() {
            chosen.push(i);
            rec(roots, size, i + 1, chosen, acc);
            chosen.pop();
        }
    }
    let mut acc = Rational::zero();
    rec(roots, size, 0, &mut Vec::new(), &mut acc);
    acc
}

#[test]
fn normalized_subdiscriminants_are_root_subset_sums() {
    let cases: &[&[i64]] = &[&[1, 2, 4], &[0, 3, -1, 5], &[2, 2, -1, 5], &[1, -2, 3, 0, 4], &[1, 2, 3, 5, 8, 13]];
    for roots in cases {
        let roots = ints(roots);
        let n = roots.len();
        let mut z = Vec::new();
        let coeffs = coefficients_of_roots(&int(1), &roots);
        for (i, c) in coeffs.iter().enumerate().skip(1) {
            z.push(dplus::rational::sign_pow(i) * c);
        }
        for j in 0..n {
            let s = gist::subdiscriminant_z(n, j).unwrap();
            assert_eq!(s.evaluate_at(&z).unwrap(), subdiscriminant_from_roots(&roots, n - j), "n={n} j={j}");
        }
    }
}

#[test]
fn raw_subdiscriminant_relations() {
    // S^2_0 against D for the quadratic: S_0 = res(p, p') = -c0 D
    let s = resultant::subdiscriminant(2, 0).unwrap();
    let d = resultant::discriminant_symbolic(2).unwrap();
    let c0 = MultiPoly::var(&c_vars(2), "c0").unwrap();
    assert_eq!(s, -(&c0 * &*d));
    for n in 2..=5 {
        let top = resultant::subdiscriminant(n, n - 1).unwrap();
        let c0 = MultiPoly::var(&c_vars(n), "c0").unwrap();
        assert_eq!(top, c0.scale(&int(n as i64)));
    }
    assert!(resultant::subdiscriminant(3, 3).is_err());
}

#[test]
fn derivative_and_specialization_of_cubic_discriminant() {
    let d = resultant::discriminant_symbolic(3).unwrap();
    let v = c_vars(3);
    let c = |s: &str| MultiPoly::var(&v, s).unwrap();
    let k = |x: i64| MultiPoly::constant(&v, int(x));
    let g = d.partial_derivative("c3").unwrap();
    let want = k(-4) * c("c1").pow(3) + k(18) * c("c0") * c("c1") * c("c2") - k(54) * c("c0").pow(2) * c("c3");
    assert_eq!(g, want);
    assert_eq!(gist::h_poly(3, 2).unwrap().to_string(), "4*z1^3 - 18*z1*z2 + 54*z3");
    let h = gist::h_poly(3, 2).unwrap();
    assert_eq!(h.evaluate(&point(&["z1", "z2", "z3"], &ints(&[5, 7, 3]))).unwrap(), int(32));
}

#[test]
fn gist_constants_and_shared_h() {
    assert_eq!(gist::c_mu(&mu(&[2, 1])), int(-4));
    assert_eq!(gist::c_mu(&mu(&[1, 1])), int(1));
    assert_eq!(gist::c_mu(&mu(&[2, 2])), int(32));
    let g = gist::gist_general(&mu(&[1, 1])).unwrap();
    assert_eq!((g.h.to_string(), g.c_mu), ("z1^2 - 4*z2".to_string(), int(1)));
    let a = gist::gist_general(&mu(&[3, 2])).unwrap();
    let b = gist::gist_general(&mu(&[4, 1])).unwrap();
    assert_eq!(a.h, b.h);
    assert_ne!(a.c_mu, b.c_mu);
}

#[test]
fn elementary_symmetric_small() {
    let v = VarTable::new(["x1", "x2", "x3"]).unwrap();
    let x = |s: &str| MultiPoly::var(&v, s).unwrap();
    let over = ["x1", "x2", "x3"];
    assert_eq!(elementary_symmetric(&v, 0, &over).unwrap(), MultiPoly::one(&v));
    assert_eq!(elementary_symmetric(&v, 1, &over).unwrap(), x("x1") + x("x2") + x("x3"));
    assert_eq!(
        elementary_symmetric(&v, 2, &over).unwrap(),
        x("x1") * x("x2") + x("x1") * x("x3") + x("x2") * x("x3")
    );
    assert!(elementary_symmetric(&v, 4, &over).is_err());
}

#[test]
fn substitution_and_division_examples() {
    let v = VarTable::new(["c0", "c1", "z1"]).unwrap();
    let x = |s: &str| MultiPoly::var(&v, s).unwrap();
    let mut a = HashMap::new();
    a.insert("c1".to_string(), -(x("z1") * x("c0")));
    assert_eq!(x("c1").pow(2).substitute(&a, &v).unwrap(), x("z1").pow(2) * x("c0").pow(2));
    assert_eq!(x("c1").substitute(&HashMap::new(), &v).unwrap(), x("c1"));
    let one = MultiPoly::one(&v);
    assert_eq!((x("z1").pow(2) - one.clone()).exact_div(&(x("z1") - one.clone())).unwrap(), x("z1") + one.clone());
    assert_eq!(
        (x("z1").pow(2) + one.clone()).exact_div(&(x("z1") - one)),
        Err(dplus::Error::NonExactDivision)
    );
}

#[test]
fn univariate_examples() {
    assert_eq!(
        UniPoly::from_ints(&[1, -5, 7, -3]).derivative(),
        UniPoly::from_ints(&[3, -10, 7])
    );
    assert_eq!(UniPoly::from_ints(&[1, 0, -2, 0, 1]).derivative(), UniPoly::from_ints(&[4, 0, -4, 0]));
    assert!(UniPoly::from_ints(&[9]).derivative().is_zero());
    assert_eq!(UniPoly::from_ints(&[1, -5, 7, -3]).evaluate(&int(1)), int(0));
    let roots = [(int(1), 2), (int(3), 1)];
    assert_eq!(UniPoly::from_roots(&roots, &int(1)), UniPoly::from_ints(&[1, -5, 7, -3]));
}

#[test]
fn poisson_expressions() {
    let vars = poisson::poisson_vars(1, 1);
    assert_eq!(
        vars.names(),
        &["a0", "a1", "b0", "b1", "alpha1", "beta1"].map(String::from)
    );
    // res(x^2 - 1, x - 2) with its own roots substituted stays 3
    let vars = poisson::poisson_vars(2, 1);
    let res = poisson::generic_resultant(2, 1).unwrap();
    let va = poisson::VieteSubstitution::new(&vars, poisson::Side::A, 2).unwrap();
    let sub = poisson::viete_apply(&res, &[va]).unwrap();
    let at = point(
        &["a0", "a1", "a2", "b0", "b1", "alpha1", "alpha2", "beta1"],
        &ints(&[1, 0, -1, 1, -2, 1, -1, 2]),
    );
    assert_eq!(sub.evaluate(&at).unwrap(), int(3));
    assert_eq!(res.evaluate(&at).unwrap(), int(3));
    for (m, n) in [(1, 1), (2, 2), (3, 2)] {
        assert!(poisson::poisson_verify(m, n).unwrap().all_hold());
    }
}

#[test]
fn dplus_values() {
    let cases: &[(&[i64], i64, &[usize])] = &[
        (&[1, -5, 7, -3], -8, &[2, 1]),
        (&[1, -3, 0, 4], 27, &[2, 1]),
        (&[1, 0, -2, 0, 1], 16, &[2, 2]),
    ];
    for (coeffs, value, parts) in cases {
        let r = dp::dplus_from_coeffs(&UniPoly::from_ints(coeffs)).unwrap();
        assert_eq!((r.value, r.mu), (int(*value), mu(parts)));
    }
    assert_eq!(dp::dplus_from_roots(&mu(&[2, 1]), &ints(&[2, -1])).unwrap(), int(27));
    assert_eq!(dp::dplus_from_roots(&mu(&[2, 2]), &ints(&[1, -1])).unwrap(), int(16));
    assert_eq!(dp::specialized_elem_sym(&mu(&[2, 1]), &ints(&[1, 3])).unwrap(), ints(&[5, 7, 3]));
}

#[test]
fn double_root_cubic_closed_form() {
    // D+ = (a1^3 - 9/2 a0 a1 a2 + 27/2 a0^2 a3) / a0^3 whenever mu = (2,1)
    for (lead, r1, r2) in [(1, 1, 3), (2, -1, 4), (-3, 0, 5), (7, 2, -2)] {
        let p = dp::build_poly_from_roots(&mu(&[2, 1]), &ints(&[r1, r2]), &int(lead)).unwrap();
        let a = p.coeffs();
        let closed = (&a[1] * &a[1] * &a[1] - frac(9, 2) * &a[0] * &a[1] * &a[2] + frac(27, 2) * &a[0] * &a[0] * &a[3])
            / (&a[0] * &a[0] * &a[0]);
        assert_eq!(closed, dp::dplus_from_coeffs(&p).unwrap().value);
        assert_eq!(closed, dp::dplus_from_roots(&mu(&[2, 1]), &ints(&[r1, r2])).unwrap());
    }
}
