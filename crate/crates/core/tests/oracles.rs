//! Independent brute-force routes checked against the library.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use cobordism::algebra::{c, canonical_name, parse_poly, resolve_alias, CAlias, TriDegree};
use cobordism::binomial::{alpha_bruteforce, binom_exact, binom_mod2, s_repeated_phi, CoeffQuery};
use cobordism::hopf::{s_on_phi, OpIndex};
use cobordism::mass::{d1, Complex};
use cobordism::phi::{PhiSymbol, PhiVector};
use cobordism::suites::chi_coefficient;
use cobordism::tables::Generators;

fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..rows {
        let prev = &t[n - 1];
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &prev[k - 1] + &prev[k];
        }
        t.push(row);
    }
    t
}

fn choose(table: &[Vec<BigInt>], n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    table[n as usize][k as usize].clone()
}

#[test]
fn binomials_against_pascal() {
    let t = pascal(201);
    for n in 0..=200i64 {
        for k in -2..=n + 2 {
            let exact = choose(&t, n, k);
            assert_eq!(binom_exact(n, k), exact, "C({n},{k})");
            assert_eq!(binom_mod2(n, k), (&exact % 2u32).is_one(), "C({n},{k}) mod 2");
        }
    }
}

#[test]
fn even_choose_odd_is_even() {
    for n in 1..=50 {
        for m in 1..=50 {
            assert!(!binom_mod2(2 * m, 2 * n - 1), "C({}, {})", 2 * m, 2 * n - 1);
        }
    }
}

/// The α sum by enumerating every chain `0 = i_0 < ... < i_r = m` as a
/// subset of interior points.
fn alpha_by_chains(n: u32, m: u32, k: u32, t: &[Vec<BigInt>]) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    let interior = m.saturating_sub(1);
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << interior) {
        let mut chain = vec![0u32];
        chain.extend((1..m).filter(|i| mask >> (i - 1) & 1 == 1));
        chain.push(m);
        let mut term = BigInt::one();
        for w in chain.windows(2) {
            let (i, j) = (w[0] as i64, w[1] as i64);
            term *= choose(t, 2 * n - (m as i64 - i) * k, j - i);
        }
        if (chain.len() - 2) % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    -total
}

#[test]
fn alpha_sum_against_chain_enumeration() {
    let t = pascal(64);
    for n in 1..=20u32 {
        for k in 1..=8u32 {
            for m in 1..=12u32 {
                if let Ok(a) = alpha_bruteforce(CoeffQuery::new(n, m, k)) {
                    assert_eq!(a, alpha_by_chains(n, m, k, &t), "n={n} m={m} k={k}");
                }
            }
        }
    }
}

#[test]
fn alpha_sum_is_a_chi_coefficient() {
    for n in 1..=10u32 {
        for m in 1..=12u32 {
            for k in (1..=12 / m).filter(|k| m * k % 2 == 0 && m * k < 2 * n) {
                let a = alpha_bruteforce(CoeffQuery::new(n, m, k)).unwrap();
                assert_eq!(Some(a), chi_coefficient(n, m, k), "n={n} m={m} k={k}");
            }
        }
    }
}

#[test]
fn repeated_operation_degrees() {
    for n in 1..=20u32 {
        for k in 1..=8u32 {
            for m in 1..=13u32 {
                for s in s_repeated_phi(n, k, m).terms() {
                    assert_eq!(s.dim() as i64, 8 * n as i64 - 3 - 4 * (m * k) as i64);
                }
            }
        }
    }
}

#[test]
fn printed_operation_values() {
    let phi = |i| PhiVector::single(PhiSymbol::phi(i));
    let sop = |w: &str, m| s_on_phi(&w.parse::<OpIndex>().unwrap(), m);
    assert_eq!(sop("2,2", 9), phi(7));
    assert_eq!(sop("2,2,2,2,2,2,2,2,2", 10), phi(1));
    assert_eq!(sop("3,3,3,3", 12), phi(6));
    assert!(sop("99", 2).is_zero());
}

#[test]
fn alias_round_trip() {
    for mask in (1u32..(1 << 5)).filter(|m| m.count_ones() >= 2) {
        let tuple: Vec<u32> = (0..5).filter(|b| mask >> b & 1 == 1).map(|b| b + 2).collect();
        let n = resolve_alias(&tuple).unwrap();
        match canonical_name(n).unwrap() {
            CAlias::Multi(back) => assert_eq!(back, tuple),
            other => panic!("c{n} named {other:?}"),
        }
    }
    assert_eq!(parse_poly("c{2,3}").unwrap(), c(5));
}

#[test]
fn small_differentials() {
    assert!(d1(&parse_poly("h0").unwrap()).is_zero());
    assert_eq!(d1(&c(5)), parse_poly("u2*h3 + u3*h2").unwrap());
}

#[test]
fn u1_cell() {
    let cx = Complex::default();
    let h = cx.homology(TriDegree::new(0, 1, 2)).unwrap();
    assert_eq!((h.basis_dim, h.dim), (1, 1));
    assert_eq!(h.representatives, vec![parse_poly("u1").unwrap()]);
    assert!(h.to_cell_text().starts_with("CELL 0 1 2 | 1 | 1 | 0 | 1"));
}

#[test]
fn table12_is_nonzero_in_homology() {
    let cx = Complex::default();
    for g in Generators::builtin().of_table(12) {
        assert!(cx.is_cycle(&g.value).unwrap(), "{}", g.name);
        assert!(!cx.is_boundary(&g.value).unwrap(), "{}", g.name);
    }
}
