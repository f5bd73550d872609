//! Independent reference implementations used to cross-check the library.
//! They work directly on Cayley tables and share no code with it beyond the
//! table accessors.

#![allow(dead_code)]

use skewbrace::{CayleyGroup, ElemSet, SkewBrace};

pub type Table = Vec<Vec<usize>>;

pub fn rows(g: &CayleyGroup) -> Table {
    g.rows()
}

pub fn inverse(t: &Table, x: usize) -> usize {
    (0..t.len()).find(|&y| t[x][y] == 0).unwrap()
}

pub fn is_group(t: &Table) -> bool {
    let n = t.len();
    let latin = (0..n).all(|x| {
        let mut r = vec![false; n];
        let mut c = vec![false; n];
        (0..n).all(|y| {
            !std::mem::replace(&mut r[t[x][y]], true) && !std::mem::replace(&mut c[t[y][x]], true)
        })
    });
    latin
        && (0..n).all(|x| t[0][x] == x && t[x][0] == x)
        && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]])))
}

/// `(x·y)∘z = (x∘z)·z⁻¹·(y∘z)` for all triples.
pub fn brace_axiom(add: &Table, mul: &Table) -> bool {
    let n = add.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let right = add[add[mul[x][z]][inverse(add, z)]][mul[y][z]];
                mul[add[x][y]][z] == right
            })
        })
    })
}

/// Every subset closed under the product, by enumeration of bitmasks
/// (so only for small groups).
pub fn subgroups_by_subsets(t: &Table) -> Vec<ElemSet> {
    let n = t.len();
    assert!(n <= 20);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 || n % (mask.count_ones() as usize) != 0 {
            continue;
        }
        let has = |x: usize| mask >> x & 1 == 1;
        if (0..n)
            .filter(|&x| has(x))
            .all(|x| (0..n).filter(|&y| has(y)).all(|y| has(t[x][y])))
        {
            out.push(ElemSet::new((0..n).filter(|&x| has(x))));
        }
    }
    out.sort();
    out
}

pub fn is_normal(t: &Table, s: &ElemSet) -> bool {
    let n = t.len();
    (0..n).all(|g| s.iter().all(|x| s.contains(t[t[inverse(t, g)][x]][g])))
}

/// `γ(z)(x) = (x∘z)·z⁻¹`, straight from the tables.
pub fn gamma(add: &Table, mul: &Table, z: usize, x: usize) -> usize {
    add[mul[x][z]][inverse(add, z)]
}

pub fn gamma_invariant(add: &Table, mul: &Table, s: &ElemSet) -> bool {
    (0..add.len()).all(|z| s.iter().all(|x| s.contains(gamma(add, mul, z, x))))
}

/// Ideals by subset enumeration.
pub fn ideals_by_subsets(b: &SkewBrace) -> Vec<ElemSet> {
    let (add, mul) = (b.add_rows(), b.mul_rows());
    subgroups_by_subsets(&add)
        .into_iter()
        .filter(|s| is_normal(&add, s) && is_normal(&mul, s) && gamma_invariant(&add, &mul, s))
        .filter(|s| s.iter().all(|x| s.iter().all(|y| s.contains(mul[x][y]))))
        .collect()
}

/// Supersoluble straight from the definition: for every proper ideal `I`
/// there is an ideal `J ⊃ I` with `|J : I|` prime (ideals of `B/I` are the
/// `J/I`).
pub fn supersoluble_by_definition(b: &SkewBrace) -> bool {
    let ideals = ideals_by_subsets(b);
    let prime = |k: usize| k > 1 && (2..k).all(|d| k % d != 0);
    ideals.iter().filter(|i| i.len() < b.order()).all(|i| {
        ideals
            .iter()
            .any(|j| i.is_subset(j) && j.len() % i.len() == 0 && prime(j.len() / i.len()))
    })
}

/// All bijections of `0..n` fixing 0 that preserve the table.
pub fn automorphisms_by_search(t: &Table) -> Vec<Vec<usize>> {
    let n = t.len();
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; n];
    img[0] = 0;
    fn rec(t: &Table, x: usize, img: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = t.len();
        if x == n {
            if (0..n).all(|a| (0..n).all(|b| img[t[a][b]] == t[img[a]][img[b]])) {
                out.push(img.clone());
            }
            return;
        }
        for v in 1..n {
            if img[..x].contains(&v) {
                continue;
            }
            img[x] = v;
            let ok =
                (0..=x).all(|a| (0..=x).all(|b| t[a][b] > x || img[t[a][b]] == t[img[a]][img[b]]));
            if ok {
                rec(t, x + 1, img, out);
            }
        }
        img[x] = usize::MAX;
    }
    if n == 1 {
        return vec![vec![0]];
    }
    rec(t, 1, &mut img, &mut out);
    out
}

/// Whether some bijection carries one table to the other.
pub fn isomorphic(a: &Table, b: &Table) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let order = |t: &Table, x: usize| {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = t[y][x];
            k += 1;
        }
        k
    };
    let mut oa: Vec<usize> = (0..n).map(|x| order(a, x)).collect();
    let mut ob: Vec<usize> = (0..n).map(|x| order(b, x)).collect();
    let (ra, rb) = (oa.clone(), ob.clone());
    oa.sort();
    ob.sort();
    if oa != ob {
        return false;
    }
    fn rec(
        a: &Table,
        b: &Table,
        ra: &[usize],
        rb: &[usize],
        x: usize,
        img: &mut Vec<usize>,
    ) -> bool {
        let n = a.len();
        if x == n {
            return true;
        }
        for v in 0..n {
            if ra[x] != rb[v] || img[..x].contains(&v) {
                continue;
            }
            img[x] = v;
            let ok =
                (0..=x).all(|p| (0..=x).all(|q| a[p][q] > x || img[a[p][q]] == b[img[p]][img[q]]));
            if ok && rec(a, b, ra, rb, x + 1, img) {
                return true;
            }
        }
        false
    }
    let mut img = vec![0; n];
    rec(a, b, &ra, &rb, 1, &mut img) || n == 1
}

/// One representative of every group of order `n`, found by table search.
///
/// Any group can be labelled so that, for an element `g` of maximal order
/// `k` and coset representatives `r_j` labelled `j·k`, the element
/// `r_j·g^i` is `j·k + i`. Under this labelling the product is determined
/// by the columns `j·k`, which are searched cell by cell with Latin and
/// associativity pruning. The result is reduced up to isomorphism.
pub fn groups_by_search(n: usize) -> Vec<Table> {
    let mut found: Vec<Table> = Vec::new();
    for k in (1..=n).filter(|k| n % k == 0) {
        let mut t: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
        let shift = |v: usize, i: usize| v - v % k + (v % k + i) % k;
        for x in 0..n {
            for i in 0..k {
                t[x][i] = Some(shift(x, i));
            }
        }
        if k == 1 && n > 1 {
            continue;
        }
        // Row by row, so that rows which are products of earlier rows are
        // pinned down by the associativity check as soon as they start.
        let mut cells = Vec::new();
        for x in 0..n {
            for j in 1..n / k {
                cells.push((x, j * k));
            }
        }
        let mut out = Vec::new();
        search_cells(&mut t, &cells, 0, k, &mut out);
        for table in out {
            let max_order = (0..n)
                .map(|x| {
                    let (mut y, mut c) = (x, 1);
                    while y != 0 {
                        y = table[y][x];
                        c += 1;
                    }
                    c
                })
                .max()
                .unwrap();
            if max_order == k && is_group(&table) && !found.iter().any(|f| isomorphic(f, &table)) {
                found.push(table);
            }
        }
    }
    found
}

fn search_cells(
    t: &mut Vec<Vec<Option<usize>>>,
    cells: &[(usize, usize)],
    idx: usize,
    k: usize,
    out: &mut Vec<Table>,
) {
    let n = t.len();
    if idx == cells.len() {
        out.push(
            t.iter()
                .map(|r| r.iter().map(|v| v.unwrap()).collect())
                .collect(),
        );
        return;
    }
    let (x, c) = cells[idx];
    let shift = |v: usize, i: usize| v - v % k + (v % k + i) % k;
    for v in 0..n {
        // Row x must stay injective over the whole coset block of column c.
        let clash = (0..k).any(|i| {
            let w = shift(v, i);
            (0..n).any(|y| (y < c || y >= c + k) && t[x][y] == Some(w))
                || (0..n).any(|r| r != x && t[r][c + i] == Some(w))
        });
        if clash || (x == 0 && v != c) {
            continue;
        }
        for i in 0..k {
            t[x][c + i] = Some(shift(v, i));
        }
        if associative_so_far(t) {
            search_cells(t, cells, idx + 1, k, out);
        }
        for i in 0..k {
            t[x][c + i] = None;
        }
    }
}

fn associative_so_far(t: &[Vec<Option<usize>>]) -> bool {
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = t[a][b] else { continue };
            for c in 0..n {
                if let (Some(l), Some(bc)) = (t[ab][c], t[b][c]) {
                    if let Some(r) = t[a][bc] {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// All multiplicative tables making a skew brace with additive table `add`,
/// by a column search.
///
/// Column `z` of `∘` is the map `f(x) = x∘z`, which satisfies
/// `f(x·y) = f(x)·z⁻¹·f(y)` and `f(0) = z`, so it is fixed by its values on
/// a generating set. Columns are chosen in order, each new column forcing
/// the columns of all products `y∘z` by associativity.
pub fn braces_by_column_search(add: &Table) -> Vec<Table> {
    let n = add.len();
    let gens = generators(add);
    let zinv: Vec<usize> = (0..n).map(|z| inverse(add, z)).collect();
    // Candidate columns for each z.
    let candidates: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|z| {
            let mut out = Vec::new();
            let mut choice = vec![0; gens.len()];
            loop {
                if let Some(f) = extend_column(add, &gens, &choice, z, zinv[z]) {
                    out.push(f);
                }
                let mut i = 0;
                while i < choice.len() {
                    choice[i] += 1;
                    if choice[i] < n {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == choice.len() {
                    break;
                }
            }
            out
        })
        .collect();
    let mut cols: Vec<Option<Vec<usize>>> = vec![None; n];
    cols[0] = Some((0..n).collect());
    let mut out = Vec::new();
    column_search(&candidates, &mut cols, &mut out);
    out.sort();
    out
}

fn generators(t: &Table) -> Vec<usize> {
    let n = t.len();
    let mut gens = Vec::new();
    let mut span = vec![0usize];
    while span.len() < n {
        let g = (0..n).find(|x| !span.contains(x)).unwrap();
        gens.push(g);
        let mut frontier = span.clone();
        frontier.push(g);
        span = vec![0];
        while let Some(x) = frontier.pop() {
            if !span.contains(&x) {
                span.push(x);
            }
            for &h in &gens {
                let y = t[x][h];
                if !span.contains(&y) {
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

fn extend_column(
    add: &Table,
    gens: &[usize],
    choice: &[usize],
    z: usize,
    zinv: usize,
) -> Option<Vec<usize>> {
    let n = add.len();
    let mut f = vec![usize::MAX; n];
    f[0] = z;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for (&g, &fg) in gens.iter().zip(choice) {
            let y = add[x][g];
            let v = add[add[f[x]][zinv]][fg];
            if f[y] == usize::MAX {
                f[y] = v;
                stack.push(y);
            } else if f[y] != v {
                return None;
            }
        }
    }
    let mut seen = vec![false; n];
    if f.iter().any(|&v| std::mem::replace(&mut seen[v], true)) {
        return None;
    }
    // Values on generators must agree with the chosen ones.
    if gens.iter().zip(choice).any(|(&g, &c)| f[g] != c) {
        return None;
    }
    // The relation must hold for all pairs, not just along generators.
    let ok = (0..n).all(|x| (0..n).all(|y| f[add[x][y]] == add[add[f[x]][zinv]][f[y]]));
    ok.then_some(f)
}

fn column_search(
    candidates: &[Vec<Vec<usize>>],
    cols: &mut Vec<Option<Vec<usize>>>,
    out: &mut Vec<Table>,
) {
    let n = cols.len();
    let Some(z) = cols.iter().position(Option::is_none) else {
        let table: Table = (0..n)
            .map(|x| (0..n).map(|z| cols[z].as_ref().unwrap()[x]).collect())
            .collect();
        out.push(table);
        return;
    };
    for cand in &candidates[z] {
        let saved = cols.clone();
        cols[z] = Some(cand.clone());
        if propagate(candidates, cols) {
            column_search(candidates, cols, out);
        }
        *cols = saved;
    }
}

/// Forces `col[y∘z] = col[y] then col[z]` until stable; false on conflict
/// or when a row repeats a value.
fn propagate(candidates: &[Vec<Vec<usize>>], cols: &mut [Option<Vec<usize>>]) -> bool {
    let n = cols.len();
    loop {
        let mut changed = false;
        for y in 0..n {
            for z in 0..n {
                let (Some(cy), Some(cz)) = (&cols[y], &cols[z]) else {
                    continue;
                };
                let w = cz[y];
                let comp: Vec<usize> = (0..n).map(|x| cz[cy[x]]).collect();
                match &cols[w] {
                    Some(cw) if *cw != comp => return false,
                    Some(_) => {}
                    None => {
                        if !candidates[w].contains(&comp) {
                            return false;
                        }
                        cols[w] = Some(comp);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    // Row x: the values x∘z over assigned z are distinct.
    (0..n).all(|x| {
        let mut seen = vec![false; n];
        cols.iter()
            .flatten()
            .all(|c| !std::mem::replace(&mut seen[c[x]], true))
    })
}
