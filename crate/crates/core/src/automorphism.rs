//! Exact automorphism groups through a stabilizer chain.
//!
//! Base points are chosen from the first non-trivial cell of the refined
//! partition. For each base point `b` the orbit of `b` in the pointwise
//! stabilizer of the earlier base points is found by asking, for every
//! candidate image `u` in the same cell, whether the partial map
//! `base ++ [b] -> base ++ [u]` extends to an automorphism. The group is the
//! product of the transversals.

use serde::{Deserialize, Serialize};

use crate::canon::{first_nontrivial, individualize, initial_partition, refine, Cells, Dense};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::perm::Permutation;

pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Level {
    point: usize,
    /// `transversal[0]` is the identity.
    transversal: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismGroup {
    degree: usize,
    order: u128,
    generators: Vec<Permutation>,
    #[serde(skip)]
    levels: Vec<Level>,
}

impl AutomorphismGroup {
    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Every element exactly once, the identity first.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            group: self,
            digits: vec![0; self.levels.len()],
            done: false,
        }
    }

    pub fn all_elements(&self) -> Vec<Permutation> {
        self.elements().collect()
    }

    /// Orbits of the point set, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// Mixed-radix walk over `t_1[i_1] ∘ t_2[i_2] ∘ … ∘ t_k[i_k]`.
pub struct Elements<'a> {
    group: &'a AutomorphismGroup,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let levels = &self.group.levels;
        let mut p = Permutation::identity(self.group.degree);
        for (level, &i) in levels.iter().zip(&self.digits) {
            p = p.compose(&level.transversal[i]);
        }
        let mut k = self.digits.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.digits[k] += 1;
            if self.digits[k] < levels[k].transversal.len() {
                break;
            }
            self.digits[k] = 0;
        }
        Some(p)
    }
}

pub fn orbits_of(n: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in generators {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(x);
    }
    out
}

pub fn automorphism_group(g: &Multigraph) -> Result<AutomorphismGroup> {
    automorphism_group_bounded(g, DEFAULT_AUTOMORPHISM_BOUND)
}

pub fn automorphism_group_bounded(g: &Multigraph, bound: usize) -> Result<AutomorphismGroup> {
    let n = g.order();
    if n > bound {
        return Err(Error::TooLarge {
            what: "automorphism search",
            order: n,
            bound,
        });
    }
    let d = Dense::new(g);
    let mut cells = initial_partition(&d, &mut Vec::new());
    let mut base: Vec<usize> = Vec::new();
    let mut levels = Vec::new();
    let mut generators = Vec::new();
    while let Some(t) = first_nontrivial(&cells) {
        let b = cells[t][0];
        let mut transversal = vec![Permutation::identity(n)];
        let mut from = base.clone();
        from.push(b);
        for &u in &cells[t][1..] {
            let mut to = base.clone();
            to.push(u);
            if let Some(p) = extension(&d, &from, &to) {
                generators.push(p.clone());
                transversal.push(p);
            }
        }
        levels.push(Level {
            point: b,
            transversal,
        });
        individualize(&mut cells, t, b);
        refine(&d, &mut cells, &mut Vec::new());
        base.push(b);
    }
    let order = levels.iter().map(|l| l.transversal.len() as u128).product();
    Ok(AutomorphismGroup {
        degree: n,
        order,
        generators,
        levels,
    })
}

/// An automorphism of `g` sending `from[i]` to `to[i]` for every `i`, if any.
pub fn find_extension(g: &Multigraph, from: &[usize], to: &[usize]) -> Option<Permutation> {
    if from.len() != to.len() || from.iter().chain(to).any(|&x| x >= g.order()) {
        return None;
    }
    extension(&Dense::new(g), from, to)
}

pub(crate) fn extension(d: &Dense, from: &[usize], to: &[usize]) -> Option<Permutation> {
    let mut left = initial_partition(d, &mut Vec::new());
    let mut right = left.clone();
    for (&a, &b) in from.iter().zip(to) {
        let ta = left.iter().position(|c| c.contains(&a))?;
        let tb = right.iter().position(|c| c.contains(&b))?;
        if ta != tb || left[ta].len() != right[tb].len() {
            return None;
        }
        if left[ta].len() == 1 {
            continue;
        }
        individualize(&mut left, ta, a);
        individualize(&mut right, tb, b);
        if !refine_pair(d, &mut left, &mut right) {
            return None;
        }
    }
    extend(d, &left, &right)
}

/// Refines both partitions; false when they diverge structurally.
fn refine_pair(d: &Dense, left: &mut Cells, right: &mut Cells) -> bool {
    let (mut tl, mut tr) = (Vec::new(), Vec::new());
    refine(d, left, &mut tl);
    refine(d, right, &mut tr);
    tl == tr && left.len() == right.len() && left.iter().zip(right.iter()).all(|(a, b)| a.len() == b.len())
}

fn extend(d: &Dense, left: &Cells, right: &Cells) -> Option<Permutation> {
    let Some(t) = first_nontrivial(left) else {
        let mut images = vec![0; d.n];
        for (a, b) in left.iter().zip(right) {
            images[a[0]] = b[0];
        }
        return d
            .is_automorphism(&images)
            .then(|| Permutation::from_images(images).expect("cells partition the vertices"));
    };
    let x = left[t][0];
    for &y in &right[t] {
        let (mut l, mut r) = (left.clone(), right.clone());
        individualize(&mut l, t, x);
        individualize(&mut r, t, y);
        if refine_pair(d, &mut l, &mut r) {
            if let Some(p) = extend(d, &l, &r) {
                return Some(p);
            }
        }
    }
    None
}
