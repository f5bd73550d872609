use serde::Serialize;

use super::{EnumError, Result};
use crate::arith::is_prime;
use crate::finite_group::{semidirect_product, CayleyGroup};
use crate::perm::Perm;

/// Cyclic groups are available up to this order.
pub const MAX_CATALOG_ORDER: usize = 48;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogGroup {
    pub name: String,
    #[serde(skip)]
    pub group: CayleyGroup,
}

fn named(name: impl Into<String>, group: CayleyGroup) -> CatalogGroup {
    CatalogGroup {
        name: name.into(),
        group,
    }
}

fn z(n: usize) -> CayleyGroup {
    CayleyGroup::cyclic(n)
}

fn product(parts: &[usize]) -> CatalogGroup {
    let name: Vec<String> = parts.iter().map(|n| format!("Z{n}")).collect();
    let group = parts[1..]
        .iter()
        .fold(z(parts[0]), |g, &n| g.direct_product(&z(n)));
    named(name.join("x"), group)
}

/// Dihedral group of order `2n`: `(k, e)` numbered `k + n·e`, `e = 1` a reflection.
fn dihedral(n: usize) -> CayleyGroup {
    CayleyGroup::from_fn(2 * n, |x, y| {
        let (k, e, l, f) = (x % n, x / n, y % n, y / n);
        let l = if e == 1 { (n - l) % n } else { l };
        (k + l) % n + n * (e ^ f)
    })
    .expect("dihedral table")
}

/// Dicyclic group of order `4m`: `a` of order `2m`, `x² = a^m`, `x a x⁻¹ = a⁻¹`.
/// `a^k x^e` is numbered `k + 2m·e`.
fn dicyclic(m: usize) -> CayleyGroup {
    let r = 2 * m;
    CayleyGroup::from_fn(2 * r, |x, y| {
        let (k, e, l, f) = (x % r, x / r, y % r, y / r);
        match (e, f) {
            (0, _) => (k + l) % r + r * f,
            (_, 0) => (k + r - l) % r + r,
            _ => (k + r - l + m) % r,
        }
    })
    .expect("dicyclic table")
}

/// `Z_q ⋉ Z_p` with a generator of `Z_q` acting as multiplication by `u`.
fn metacyclic(q: usize, p: usize, u: usize) -> CayleyGroup {
    let act: Vec<Perm> = (0..q)
        .map(|k| {
            let mult = (0..k).fold(1, |acc, _| acc * u % p);
            Perm::from_images((0..p).map(|x| x * mult % p).collect()).expect("unit multiplication")
        })
        .collect();
    semidirect_product(&z(q), &z(p), &act).expect("metacyclic action")
}

/// The group of all permutations of `0..k`, elements in lexicographic order.
fn symmetric(k: usize) -> CayleyGroup {
    let mut perms = vec![(0..k).collect::<Vec<usize>>()];
    loop {
        let mut p = perms.last().unwrap().clone();
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        perms.push(p);
    }
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    CayleyGroup::from_fn(perms.len(), |x, y| {
        let composed: Vec<usize> = (0..k).map(|i| perms[y][perms[x][i]]).collect();
        index(&composed)
    })
    .expect("symmetric group table")
}

/// `Z_3 ⋉ (Z_2 × Z_2)` with the generator cycling the three involutions.
fn alternating4() -> CayleyGroup {
    let v4 = z(2).direct_product(&z(2));
    let cycle = Perm::from_images(vec![0, 2, 3, 1]).unwrap();
    let act = vec![Perm::identity(4), cycle.clone(), cycle.then(&cycle)];
    semidirect_product(&z(3), &v4, &act).expect("A4 action")
}

/// Groups of order `n` from the built-in constructors.
///
/// Complete up to isomorphism for `n ≤ 12`, primes, and `n ∈ {14, 15, 21, 22, 30}`;
/// elsewhere a selection (cyclic, some abelian and dihedral groups, `Q16`, `S4`).
pub fn small_group_catalog(n: usize) -> Result<Vec<CatalogGroup>> {
    if n == 0 || n > MAX_CATALOG_ORDER {
        return Err(EnumError::UnsupportedOrder(n));
    }
    let mut out = vec![named(format!("Z{n}"), z(n))];
    match n {
        4 => out.push(product(&[2, 2])),
        6 => out.push(named("S3", symmetric(3))),
        8 => {
            out.push(product(&[4, 2]));
            out.push(product(&[2, 2, 2]));
            out.push(named("D4", dihedral(4)));
            out.push(named("Q8", dicyclic(2)));
        }
        9 => out.push(product(&[3, 3])),
        10 => out.push(named("D5", dihedral(5))),
        12 => {
            out.push(product(&[6, 2]));
            out.push(named("A4", alternating4()));
            out.push(named("D6", dihedral(6)));
            out.push(named("Dic12", dicyclic(3)));
        }
        14 => out.push(named("D7", dihedral(7))),
        16 => {
            out.push(product(&[8, 2]));
            out.push(product(&[4, 4]));
            out.push(product(&[4, 2, 2]));
            out.push(product(&[2, 2, 2, 2]));
            out.push(named("D8", dihedral(8)));
            out.push(named("Q16", dicyclic(4)));
        }
        18 => {
            out.push(product(&[6, 3]));
            out.push(named("D9", dihedral(9)));
        }
        20 => {
            out.push(product(&[10, 2]));
            out.push(named("D10", dihedral(10)));
        }
        21 => out.push(named("F21", metacyclic(3, 7, 2))),
        22 => out.push(named("D11", dihedral(11))),
        24 => {
            out.push(named("S4", symmetric(4)));
            out.push(named("D12", dihedral(12)));
        }
        30 => {
            out.push(named("D15", dihedral(15)));
            out.push(named("S3xZ5", symmetric(3).direct_product(&z(5))));
            out.push(named("D5xZ3", dihedral(5).direct_product(&z(3))));
        }
        _ => {}
    }
    Ok(out)
}

/// True when [`small_group_catalog`] lists every group of order `n` up to isomorphism.
pub fn catalog_is_complete(n: usize) -> bool {
    (1..=12).contains(&n) || is_prime(n) || [14, 15, 21, 22, 30].contains(&n)
}

/// Looks a catalog group up by name, e.g. `D4` or `Z2xZ2`.
pub fn catalog_group(name: &str) -> Result<CatalogGroup> {
    (1..=MAX_CATALOG_ORDER)
        .flat_map(|n| small_group_catalog(n).unwrap())
        .find(|g| g.name == name)
        .ok_or_else(|| EnumError::UnknownGroup(name.to_string()))
}
