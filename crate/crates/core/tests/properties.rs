use proptest::prelude::*;

use cobordism::algebra::{is_valid_c, u, Gen, Monomial, Poly, TriDegree};
use cobordism::hopf::OpIndex;
use cobordism::mass::massey::MasseyContext;
use cobordism::mass::{d1, Complex, D1_SHIFT};
use cobordism::projection::{act_on_generator, cartan_apply, Database};
use cobordism::tables::Generators;

fn pool() -> Vec<Gen> {
    let mut g = vec![Gen::H0];
    g.extend((1..=4).map(Gen::h));
    g.extend((1..=4).map(|j| Gen::u(j).unwrap()));
    g.extend((2..=13).filter(|&n| is_valid_c(n)).map(|n| Gen::c(n).unwrap()));
    g
}

fn monomial() -> impl Strategy<Value = Monomial> {
    let n = pool().len();
    prop::collection::vec((0..n, 1u32..3), 0..4)
        .prop_map(|f| Monomial::from_factors(f.into_iter().map(|(i, e)| (pool()[i], e))))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(monomial(), 0..=6).prop_map(|ms| {
        let mut p = Poly::zero();
        for m in ms {
            p.toggle(m);
        }
        p
    })
}

proptest! {
    #[test]
    fn cached_degree_is_recomputed(m in monomial()) {
        prop_assert_eq!(m.degree(), m.recomputed_degree());
    }

    #[test]
    fn addition_is_an_abelian_2_group(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a + &a).is_zero());
    }

    #[test]
    fn product_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn squaring_is_additive(a in poly(), b in poly()) {
        prop_assert_eq!((&a + &b).square(), a.square() + b.square());
    }

    #[test]
    fn d1_is_a_derivation(a in monomial(), b in monomial()) {
        let (pa, pb) = (Poly::from(a.clone()), Poly::from(b.clone()));
        prop_assert_eq!(d1(&(&pa * &pb)), &d1(&pa) * &pb + &pa * &d1(&pb));
    }

    #[test]
    fn d1_squares_to_zero(a in poly()) {
        prop_assert!(d1(&d1(&a)).is_zero());
    }

    #[test]
    fn d1_shifts_degree(m in monomial()) {
        let image = d1(&Poly::from(m.clone()));
        if let Some(d) = image.degree() {
            prop_assert_eq!(d, m.degree() + D1_SHIFT);
        }
    }
}

fn u_pairs() -> Vec<(Poly, Poly)> {
    vec![(u(2), u(3)), (u(1), u(4)), (u(3), u(5)), (u(1), u(2))]
}

#[test]
fn a_scales_with_degree_zero_elements() {
    let cx = Complex::default();
    let mc = MasseyContext::new(&cx);
    // e4 = c2^2
    let theta = Poly::from(Monomial::gen(Gen::c(2).unwrap())).square();
    for (xi, zeta) in u_pairs() {
        let a = mc.massey_a(&xi, &zeta).unwrap();
        let left = mc.massey_a(&(&theta * &xi), &zeta).unwrap();
        let diff = &(&theta * &a) + &left;
        assert!(diff.is_zero() || cx.is_boundary(&diff).unwrap(), "{xi} {zeta}");
    }
}

#[test]
fn a_is_additive() {
    let cx = Complex::default();
    let mc = MasseyContext::new(&cx);
    let generators = Generators::builtin();
    // both cycles in E^{0,1,22}
    let xi1 = &u(2) * &generators.get("e4").unwrap().value;
    let xi2 = generators.get("phi3").unwrap().value.clone();
    assert_eq!(xi1.degree(), xi2.degree());
    for zeta in [u(1), u(4)] {
        let sum = mc.massey_a(&(&xi1 + &xi2), &zeta).unwrap();
        let parts = mc.massey_a(&xi1, &zeta).unwrap() + mc.massey_a(&xi2, &zeta).unwrap();
        let diff = &sum + &parts;
        assert!(diff.is_zero() || cx.is_boundary(&diff).unwrap(), "{zeta}");
    }
}

#[test]
fn cartan_formula_on_products() {
    let db = Database::builtin();
    let gens: Vec<Gen> = [Gen::u(1), Gen::u(2), Gen::u(3), Gen::c(2), Gen::c(4), Gen::c(5)]
        .into_iter()
        .map(|g| g.unwrap())
        .collect();
    let omegas: Vec<OpIndex> = ["1", "2", "1,1", "3", "2,1", "4", "2,2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut checked = 0;
    for &a in &gens {
        for &b in &gens {
            let p = Poly::gen(a);
            let q = Poly::gen(b);
            for w in &omegas {
                let Ok(direct) = cartan_apply(w, &(&p * &q), &db) else { continue };
                let mut sum = Poly::zero();
                let mut complete = true;
                for (w1, w2) in w.splittings() {
                    match (act_on_generator(&w1, a, &db), act_on_generator(&w2, b, &db)) {
                        (Ok(x), Ok(y)) => sum += &x * &y,
                        _ => complete = false,
                    }
                }
                if complete {
                    assert_eq!(direct, sum, "S_{{{w}}}({a}*{b})");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 20, "only {checked} products had records");
}

#[test]
fn cartan_is_additive() {
    let db = Database::builtin();
    let p = Poly::gen(Gen::u(1).unwrap()) * Poly::gen(Gen::c(2).unwrap());
    let q = Poly::gen(Gen::u(2).unwrap());
    for w in ["1", "2", "1,1"] {
        let w: OpIndex = w.parse().unwrap();
        let (Ok(a), Ok(b), Ok(s)) = (
            cartan_apply(&w, &p, &db),
            cartan_apply(&w, &q, &db),
            cartan_apply(&w, &(&p + &q), &db),
        ) else {
            continue;
        };
        assert_eq!(s, a + b);
    }
}

#[test]
fn degree_arithmetic() {
    let d = TriDegree::new(0, 1, 2);
    assert_eq!(d + D1_SHIFT, TriDegree::new(1, 2, 2));
}
