#![allow(dead_code)]

use std::collections::BTreeSet;

use lexbs::monomial::monomials_of_degree;
use lexbs::{Monomial, MonomialIdeal};

pub const EX_SMALL: &str = "x^2, xy, xz, y^2";
pub const EX_ONE: &str = "x^2, xy^2, xyz, xz^2, y^8, y^7z, y^6z^2, y^5z^3, y^4z^4, y^3z^5, y^2z^6, yz^7, z^8";
pub const EX_TWO: &str = "x^2, xy^2, xyz, xz^2, y^4, y^3z, y^2z^2, yz^6, z^9";
pub const EX_THREE: &str = "x^2, xy, xz^2, y^6, y^5z, y^4z^3, y^3z^4, y^2z^5, yz^6, z^9";

pub fn ideal(text: &str) -> MonomialIdeal {
    lexbs::cli::parse_ideal(text, 3).unwrap()
}

/// Every antichain of monomials of degree `1..=max_deg` in three variables,
/// kept when it generates an Artinian lex-segment ideal.
pub fn brute_force_artinian_lex(max_deg: u32) -> BTreeSet<Vec<Vec<u32>>> {
    let pool: Vec<Monomial> = (1..=max_deg).flat_map(|d| monomials_of_degree(3, d)).collect();
    let mut found = BTreeSet::new();
    let mut chosen: Vec<Monomial> = Vec::new();
    fn walk(pool: &[Monomial], k: usize, chosen: &mut Vec<Monomial>, found: &mut BTreeSet<Vec<Vec<u32>>>) {
        if k == pool.len() {
            if chosen.is_empty() {
                return;
            }
            let i = MonomialIdeal::minimalize(chosen.clone()).unwrap();
            assert_eq!(i.generators().len(), chosen.len());
            if i.is_lex_segment() && i.is_artinian() && definition_lex(&i) {
                found.insert(key(&i));
            }
            return;
        }
        walk(pool, k + 1, chosen, found);
        let u = &pool[k];
        if chosen.iter().all(|c| !c.divides(u).unwrap() && !u.divides(c).unwrap()) {
            chosen.push(u.clone());
            walk(pool, k + 1, chosen, found);
            chosen.pop();
        }
    }
    walk(&pool, 0, &mut chosen, &mut found);
    found
}

/// Lex condition checked monomial by monomial up to `G_max + 3`.
pub fn definition_lex(i: &MonomialIdeal) -> bool {
    (0..=i.g_max() + 3).all(|d| {
        let all = monomials_of_degree(3, d);
        all.iter().enumerate().all(|(p, u)| !i.contains(u) || all[..p].iter().all(|v| i.contains(v)))
    })
}

pub fn key(i: &MonomialIdeal) -> Vec<Vec<u32>> {
    let mut k: Vec<Vec<u32>> = i.generators().iter().map(|g| g.exponents().to_vec()).collect();
    k.sort();
    k
}

/// Smallest strongly stable ideal containing `gens`.
pub fn borel_closure(gens: &[Monomial]) -> MonomialIdeal {
    let mut set: BTreeSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while let Some(u) = frontier.pop() {
        let n = u.num_vars();
        for j in 2..=n {
            let Some(lower) = u.div_var(j) else { continue };
            for i in 1..j {
                let v = lower.mul_var(i);
                if set.insert(v.clone()) {
                    frontier.push(v);
                }
            }
        }
    }
    MonomialIdeal::minimalize(set.into_iter().collect()).unwrap()
}

/// Stable, non-lex ideals built as Borel closures of one or two monomials.
pub fn bhp_corpus() -> Vec<MonomialIdeal> {
    let mut out: Vec<MonomialIdeal> = Vec::new();
    for (n, cap) in [(3usize, 24usize), (4, 12)] {
        let start = out.len();
        let pool: Vec<Monomial> = (2..=4).flat_map(|d| monomials_of_degree(n, d)).collect();
        for (a, u) in pool.iter().enumerate() {
            for v in &pool[a..] {
                let i = borel_closure(&[u.clone(), v.clone()]);
                if out.len() - start < cap && !i.is_lex_segment() && !out.contains(&i) {
                    out.push(i);
                }
            }
        }
    }
    out
}
