use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

use super::Permutation;

/// One level of the stabilizer chain: the orbit of `base` under the
/// stabilizer of all earlier base points, with coset representatives.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Indices into `PermGroup::strong` of generators fixing all earlier base points.
    gens: Vec<usize>,
    /// `transversal[b]` maps `base` to `b`, for `b` in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// A permutation group stored as a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

#[derive(Serialize)]
struct GroupJson<'a> {
    order: String,
    generators: &'a [Permutation],
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Builds the stabilizer chain with the Schreier–Sims algorithm.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_base_hint(degree, generators, &[])
    }

    /// As [`from_generators`](Self::from_generators), taking base points from
    /// `base_hint` first when they are moved.
    pub fn with_base_hint(
        degree: usize,
        generators: Vec<Permutation>,
        base_hint: &[usize],
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::LengthMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut group = PermGroup {
            degree,
            generators,
            strong: Vec::new(),
            levels: Vec::new(),
        };
        group.schreier_sims(base_hint);
        Ok(group)
    }

    fn pick_base_point(&self, p: &Permutation, hint: &[usize]) -> usize {
        hint.iter()
            .copied()
            .filter(|b| !self.levels.iter().any(|l| l.base == *b))
            .find(|&b| b < self.degree && p.apply(b) != b)
            .or_else(|| p.first_moved())
            .expect("non-identity permutation moves a point")
    }

    fn schreier_sims(&mut self, hint: &[usize]) {
        for g in self.generators.clone() {
            if g.is_identity() {
                continue;
            }
            if self.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = self.pick_base_point(&g, hint);
                self.push_level(b);
            }
            self.strong.push(g);
        }
        for i in 0..self.levels.len() {
            self.rebuild_level(i);
        }

        let mut i = self.levels.len() as isize - 1;
        'levels: while i >= 0 {
            let level = i as usize;
            let orbit = self.levels[level].orbit.clone();
            let gens = self.levels[level].gens.clone();
            for &b in &orbit {
                for &s in &gens {
                    let sb = self.strong[s].apply(b);
                    let u_b = self.levels[level].transversal[b]
                        .as_ref()
                        .expect("orbit point");
                    let u_sb = self.levels[level].transversal[sb]
                        .as_ref()
                        .expect("orbit closed");
                    let schreier = u_sb.inverse().compose(&self.strong[s].compose(u_b));
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, depth) = self.sift_from(schreier, level + 1);
                    if depth == self.levels.len() && residue.is_identity() {
                        continue;
                    }
                    if depth == self.levels.len() {
                        let b = self.pick_base_point(&residue, hint);
                        self.push_level(b);
                    }
                    self.strong.push(residue);
                    for l in level + 1..=depth {
                        self.rebuild_level(l);
                    }
                    i = depth as isize;
                    continue 'levels;
                }
            }
            i -= 1;
        }
    }

    fn push_level(&mut self, base: usize) {
        self.levels.push(Level {
            base,
            gens: Vec::new(),
            transversal: Vec::new(),
            orbit: Vec::new(),
        });
    }

    fn rebuild_level(&mut self, l: usize) {
        let fixed: Vec<usize> = self.levels[..l].iter().map(|x| x.base).collect();
        let gens: Vec<usize> = (0..self.strong.len())
            .filter(|&s| fixed.iter().all(|&b| self.strong[s].apply(b) == b))
            .collect();
        let base = self.levels[l].base;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[base] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![base];
        let mut k = 0;
        while k < orbit.len() {
            let b = orbit[k];
            for &s in &gens {
                let c = self.strong[s].apply(b);
                if transversal[c].is_none() {
                    let u = self.strong[s].compose(transversal[b].as_ref().expect("orbit point"));
                    transversal[c] = Some(u);
                    orbit.push(c);
                }
            }
            k += 1;
        }
        let level = &mut self.levels[l];
        level.gens = gens;
        level.transversal = transversal;
        level.orbit = orbit;
    }

    /// Strips `g` through the chain from level `start`. Returns the residue
    /// and the level where stripping stopped (`levels.len()` if it passed
    /// every level).
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let b = g.apply(level.base);
            match &level.transversal[b] {
                Some(u) => g = u.inverse().compose(&g),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Lengths of the fundamental orbits along the chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::LengthMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        let (residue, depth) = self.sift_from(p.clone(), 0);
        Ok(depth == self.levels.len() && residue.is_identity())
    }

    /// Orbits of the whole group on `0..degree`, each sorted, ordered by
    /// smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    /// Every element, as products of coset representatives. Only sensible
    /// for small groups; `limit` guards against accidental blow-up.
    pub fn elements(&self, limit: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(limit) {
            return Err(Error::Precondition(format!(
                "group order {order} exceeds enumeration limit {limit}"
            )));
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &b in &level.orbit {
                let u = level.transversal[b].as_ref().expect("orbit point");
                next.extend(out.iter().map(|g| u.compose(g)));
            }
            out = next;
        }
        Ok(out)
    }

    /// Equality as sets of permutations: same order, and every generator of
    /// `self` lies in `other`.
    pub fn equals(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::LengthMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        if self.order() != other.order() {
            return Ok(false);
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{"order": "<decimal>", "generators": [[...], ...]}`.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&GroupJson {
            order: self.order().to_string(),
            generators: &self.generators,
        })?)
    }
}

pub(crate) fn orbits_of(degree: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(degree);
    for g in generators {
        for i in 0..degree {
            uf.union(i, g.apply(i));
        }
    }
    uf.classes()
}

pub fn groups_equal_on_vertices(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    a.equals(b)
}

/// Disjoint sets with union by size; the representative of a class is not
/// necessarily its smallest member.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub(crate) fn class_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }

    pub(crate) fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            let r = self.find(i);
            by_root[r].push(i);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
        out.sort_by_key(|c| c[0]);
        out
    }
}
