//! Subgroup enumeration and the lattice operations everything downstream
//! leans on.
//!
//! Enumeration is join-closure over the cyclic subgroups: every subgroup is
//! a join of cyclic ones, so closing the atom set under pairwise join is
//! exhaustive. Subgroups are kept in a canonical order (order ascending,
//! then membership-bitset lexicographic) so ids are stable across runs.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A subgroup as a membership bitset over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubgroupMask {
    bits: Bitset,
    order: usize,
}

impl SubgroupMask {
    pub fn from_bits(bits: Bitset) -> Self {
        let order = bits.count();
        SubgroupMask { bits, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> &Bitset {
        &self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.bits.iter().collect()
    }

    pub fn is_subset_of(&self, other: &SubgroupMask) -> bool {
        self.bits.is_subset_of(&other.bits)
    }
}

impl PartialOrd for SubgroupMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubgroupMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.bits.lex_cmp(&other.bits))
    }
}

/// The cyclic subgroup generated by one element.
pub fn cyclic_subgroup(g: &GroupTable, x: usize) -> SubgroupMask {
    let mut bits = Bitset::new(g.order());
    bits.insert(0);
    let mut y = x;
    while y != 0 {
        bits.insert(y);
        y = g.mul(y, x);
    }
    SubgroupMask::from_bits(bits)
}

/// Smallest subgroup containing the seed elements (element-closure search).
pub fn generated(g: &GroupTable, seed: &Bitset) -> SubgroupMask {
    let n = g.order();
    let mut bits = Bitset::new(n);
    bits.insert(0);
    let mut list: Vec<usize> = vec![0];
    for x in seed.iter() {
        if !bits.contains(x) {
            bits.insert(x);
            list.push(x);
        }
    }
    let mut next = 0;
    while next < list.len() {
        if list.len() == n {
            return SubgroupMask::from_bits(Bitset::full(n));
        }
        let x = list[next];
        for k in 0..list.len() {
            let y = list[k];
            for z in [g.mul(x, y), g.mul(y, x)] {
                if !bits.contains(z) {
                    bits.insert(z);
                    list.push(z);
                }
            }
        }
        next += 1;
    }
    SubgroupMask::from_bits(bits)
}

/// Intersection of two subgroups; always a subgroup.
pub fn meet(a: &SubgroupMask, b: &SubgroupMask) -> SubgroupMask {
    SubgroupMask::from_bits(a.bits.intersection(&b.bits))
}

/// Smallest subgroup containing both.
pub fn join(g: &GroupTable, a: &SubgroupMask, b: &SubgroupMask) -> SubgroupMask {
    let mut seed = a.bits.clone();
    seed.union_with(&b.bits);
    generated(g, &seed)
}

/// |HK| = |H| |K| / |H meet K|, the size of the set product whether or not
/// it is a subgroup.
pub fn product_order(a: &SubgroupMask, b: &SubgroupMask) -> usize {
    a.order() * b.order() / meet(a, b).order()
}

pub fn is_normal(g: &GroupTable, h: &SubgroupMask) -> bool {
    for c in 0..g.order() {
        for x in h.bits.iter() {
            if !h.contains(g.conjugate(c, x)) {
                return false;
            }
        }
    }
    true
}

/// All subgroups of a group, canonically ordered and annotated.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<SubgroupMask>,
    normal: Vec<bool>,
    maximal_ids: Vec<usize>,
    frattini_id: usize,
    trivial_id: usize,
    full_id: usize,
    proper_nontrivial_ids: Vec<usize>,
}

impl SubgroupLattice {
    pub fn enumerate(g: &GroupTable, subgroup_cap: usize) -> Result<SubgroupLattice> {
        let n = g.order();
        let mut seen: HashMap<Bitset, usize> = HashMap::new();
        let mut subs: Vec<SubgroupMask> = Vec::new();
        let mut push = |m: SubgroupMask, subs: &mut Vec<SubgroupMask>| -> Result<bool> {
            if seen.contains_key(m.bits()) {
                return Ok(false);
            }
            if subs.len() >= subgroup_cap {
                return Err(Error::SubgroupCapExceeded(subgroup_cap));
            }
            seen.insert(m.bits().clone(), subs.len());
            subs.push(m);
            Ok(true)
        };

        // atoms: all cyclic subgroups (x = 0 yields the trivial subgroup)
        let mut atom_ids = Vec::new();
        for x in 0..n {
            let c = cyclic_subgroup(g, x);
            let fresh = push(c, &mut subs)?;
            if fresh && subs.last().unwrap().order() > 1 {
                atom_ids.push(subs.len() - 1);
            }
        }
        let atoms: Vec<SubgroupMask> = atom_ids.iter().map(|&i| subs[i].clone()).collect();

        // close under join with the atoms
        let mut frontier: Vec<usize> = (0..subs.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &i in &frontier {
                let base = subs[i].clone();
                for atom in &atoms {
                    if atom.is_subset_of(&base) {
                        continue;
                    }
                    let j = join(g, &base, atom);
                    if push(j, &mut subs)? {
                        next.push(subs.len() - 1);
                    }
                }
            }
            frontier = next;
        }

        subs.sort();
        let trivial_id = 0;
        let full_id = subs.len() - 1;
        debug_assert_eq!(subs[trivial_id].order(), 1);
        debug_assert_eq!(subs[full_id].order(), n);

        let normal: Vec<bool> = subs.iter().map(|h| is_normal(g, h)).collect();
        let maximal_ids = maximal_of(&subs, full_id);
        let frattini_mask = frattini_of(&subs, &maximal_ids, n);
        let frattini_id = subs
            .iter()
            .position(|s| s.bits() == frattini_mask.bits())
            .expect("frattini subgroup must be enumerated");
        let proper_nontrivial_ids: Vec<usize> = (0..subs.len())
            .filter(|&i| i != trivial_id && i != full_id)
            .collect();

        Ok(SubgroupLattice {
            subgroups: subs,
            normal,
            maximal_ids,
            frattini_id,
            trivial_id,
            full_id,
            proper_nontrivial_ids,
        })
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[SubgroupMask] {
        &self.subgroups
    }

    pub fn subgroup(&self, id: usize) -> &SubgroupMask {
        &self.subgroups[id]
    }

    pub fn is_normal(&self, id: usize) -> bool {
        self.normal[id]
    }

    /// Proper subgroups contained in no other proper subgroup.
    pub fn maximal_ids(&self) -> &[usize] {
        &self.maximal_ids
    }

    pub fn frattini_id(&self) -> usize {
        self.frattini_id
    }

    /// Intersection of all maximal subgroups; the whole group when there
    /// are none (trivial group).
    pub fn frattini(&self) -> &SubgroupMask {
        &self.subgroups[self.frattini_id]
    }

    pub fn trivial_id(&self) -> usize {
        self.trivial_id
    }

    pub fn full_id(&self) -> usize {
        self.full_id
    }

    pub fn proper_nontrivial_ids(&self) -> &[usize] {
        &self.proper_nontrivial_ids
    }

    pub fn find(&self, bits: &Bitset) -> Option<usize> {
        self.subgroups.iter().position(|s| s.bits() == bits)
    }
}

fn maximal_of(subs: &[SubgroupMask], full_id: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..subs.len() {
        if i == full_id {
            continue;
        }
        let mut covered = false;
        for j in 0..subs.len() {
            if j == i || j == full_id {
                continue;
            }
            if subs[i].is_subset_of(&subs[j]) {
                covered = true;
                break;
            }
        }
        if !covered {
            out.push(i);
        }
    }
    out
}

fn frattini_of(subs: &[SubgroupMask], maximal_ids: &[usize], n: usize) -> SubgroupMask {
    let mut acc = Bitset::full(n);
    for &m in maximal_ids {
        acc = acc.intersection(subs[m].bits());
    }
    SubgroupMask::from_bits(acc)
}
