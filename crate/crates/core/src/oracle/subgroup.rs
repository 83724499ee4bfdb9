use std::collections::BTreeMap;

use super::group::{commute, compose_into, conjugate_into, GroupTable};
use crate::par;

/// Conjugation-invariant summary used to reject non-conjugate subgroup pairs
/// before any witness search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)`, ascending by element order.
    pub order_histogram: Vec<(u64, usize)>,
    pub center_order: usize,
}

/// A subgroup of a [`GroupTable`], held as the sorted list of its element
/// indices together with a small generating set.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    members: Vec<u32>,
    generators: Vec<u32>,
    fingerprint: Fingerprint,
}

impl SubgroupHandle {
    /// Wraps a member list already known to be a subgroup of `group`.
    pub fn from_members(group: &GroupTable, mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        members.dedup();
        let generators = greedy_generators(group, &members);
        let fingerprint = fingerprint(group, &members, &generators);
        SubgroupHandle {
            members,
            generators,
            fingerprint,
        }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn fingerprint(&self) -> &Fingerprint {
        &self.fingerprint
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// True if the member set is closed under products and inverses.
    pub fn is_closed(&self, group: &GroupTable) -> bool {
        self.members.iter().all(|&a| {
            self.contains(group.invert(a))
                && self.members.iter().all(|&b| self.contains(group.multiply(a, b)))
        })
    }
}

/// Centralizer `{h : h x = x h}` of element `x`.
pub fn centralizer(group: &GroupTable, x: u32) -> SubgroupHandle {
    let xe = group.element(x as usize);
    let members = par::filter_range(group.order(), |h| commute(group.element(h), xe));
    SubgroupHandle::from_members(group, members)
}

/// Searches for `w` with `w h w^-1 = k`. Pairs with different fingerprints
/// are rejected without a search; otherwise the group is scanned in index
/// order and the first witness is returned, so the answer is deterministic.
pub fn subgroups_conjugate(
    group: &GroupTable,
    h: &SubgroupHandle,
    k: &SubgroupHandle,
) -> Option<u32> {
    if h.fingerprint != k.fingerprint {
        return None;
    }
    if h.members == k.members {
        return Some(group.identity());
    }
    let degree = group.degree();
    let maps_generators_into = |w: usize| {
        let we = group.element(w);
        let mut out = vec![0u8; degree];
        h.generators.iter().all(|&g| {
            conjugate_into(we, group.element(g as usize), &mut out);
            group.index_of(&out).is_some_and(|i| k.contains(i))
        })
    };
    let w = par::find_first(group.order(), maps_generators_into)? as u32;
    // |h| = |k|, so mapping h's generators into k already forces equality;
    // confirm on the full member set anyway.
    let mut image: Vec<u32> = h.members.iter().map(|&x| group.conjugate(w, x)).collect();
    image.sort_unstable();
    (image == k.members).then_some(w)
}

fn greedy_generators(group: &GroupTable, members: &[u32]) -> Vec<u32> {
    let order = group.order();
    let mut in_span = vec![false; order];
    in_span[0] = true;
    let mut span: Vec<u32> = vec![0];
    let mut generators = Vec::new();
    let degree = group.degree();
    let mut scratch = vec![0u8; degree];
    for &m in members {
        if in_span[m as usize] {
            continue;
        }
        generators.push(m);
        // Extend the span to the subgroup generated so far: right-multiply
        // every element found by every generator until nothing new appears.
        let mut queue_start = 0;
        let mut queue: Vec<u32> = span.clone();
        while queue_start < queue.len() {
            let a = queue[queue_start];
            queue_start += 1;
            for &g in &generators {
                compose_into(
                    group.element(a as usize),
                    group.element(g as usize),
                    &mut scratch,
                );
                let p = group.index_of(&scratch).expect("closed group");
                if !in_span[p as usize] {
                    in_span[p as usize] = true;
                    span.push(p);
                    queue.push(p);
                }
            }
        }
        if span.len() == members.len() {
            break;
        }
    }
    generators
}

fn fingerprint(group: &GroupTable, members: &[u32], generators: &[u32]) -> Fingerprint {
    let orders = par::map(members, |&m| group.element_order(m));
    let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
    for o in orders {
        *histogram.entry(o).or_default() += 1;
    }
    let center_order = par::filter_range(members.len(), |i| {
        let e = group.element(members[i] as usize);
        generators
            .iter()
            .all(|&g| commute(e, group.element(g as usize)))
    })
    .len();
    Fingerprint {
        order: members.len(),
        order_histogram: histogram.into_iter().collect(),
        center_order,
    }
}
