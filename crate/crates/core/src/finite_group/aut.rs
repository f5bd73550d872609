use super::CayleyGroup;
use crate::perm::Perm;

impl CayleyGroup {
    /// A small generating set, picked greedily by largest element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.generated(&gens);
        while span.len() < self.order {
            let next = self
                .elements()
                .filter(|&x| !span.contains(x))
                .max_by_key(|&x| (self.element_order(x), std::cmp::Reverse(x)))
                .expect("span is proper");
            gens.push(next);
            span = self.generated(&gens);
        }
        gens
    }

    /// Extends `gens[i] ↦ images[i]` to a homomorphism along the Cayley graph,
    /// returning it only if it is well defined and bijective.
    fn extend_to_automorphism(&self, gens: &[usize], images: &[usize]) -> Option<Perm> {
        let n = self.order;
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.op(x, g);
                let fy = self.op(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Perm::from_images(map)
    }

    /// All automorphisms, sorted by image list. Cached after the first call.
    ///
    /// Generators are sent to every tuple of elements of matching orders and
    /// each assignment is kept when it extends to a bijective homomorphism.
    pub fn automorphism_group(&self) -> &[Perm] {
        self.automorphisms.get_or_init(|| {
            let gens = self.generating_set();
            let candidates: Vec<Vec<usize>> = gens
                .iter()
                .map(|&g| {
                    let o = self.element_order(g);
                    self.elements()
                        .filter(|&x| self.element_order(x) == o)
                        .collect()
                })
                .collect();
            let mut out = Vec::new();
            let mut images = Vec::with_capacity(gens.len());
            self.search_automorphisms(&gens, &candidates, &mut images, &mut out);
            out.sort();
            out
        })
    }

    fn search_automorphisms(
        &self,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        out: &mut Vec<Perm>,
    ) {
        let depth = images.len();
        if depth == gens.len() {
            if let Some(p) = self.extend_to_automorphism(gens, images) {
                out.push(p);
            }
            return;
        }
        for &c in &candidates[depth] {
            // The image of the first `depth + 1` generators must itself extend
            // to an injective homomorphism on the subgroup they generate.
            images.push(c);
            if self.partial_ok(&gens[..=depth], images) {
                self.search_automorphisms(gens, candidates, images, out);
            }
            images.pop();
        }
    }

    fn partial_ok(&self, gens: &[usize], images: &[usize]) -> bool {
        let n = self.order;
        let mut map = vec![usize::MAX; n];
        let mut hit = vec![false; n];
        map[0] = 0;
        hit[0] = true;
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.op(x, g);
                let fy = self.op(map[x], img);
                if map[y] == usize::MAX {
                    if hit[fy] {
                        return false;
                    }
                    hit[fy] = true;
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    return false;
                }
            }
        }
        true
    }

    pub fn inner_automorphism_group(&self) -> Vec<Perm> {
        let mut inn: Vec<Perm> = self
            .elements()
            .map(|g| self.inner_automorphism(g))
            .collect();
        inn.sort();
        inn.dedup();
        inn
    }
}
