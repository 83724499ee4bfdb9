use std::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashTable};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::par;

/// Frontier chunk size for the closure; bounds the scratch memory of one
/// parallel product pass.
const CLOSURE_CHUNK: usize = 1 << 15;

/// Orders up to this are axiom-checked exhaustively, larger ones by probes.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 5000;
const AXIOM_PROBES: usize = 10_000;

/// A finite permutation group, fully enumerated.
///
/// Every element is stored by its canonical encoding: the image array of the
/// permutation on `0..degree`, one byte per point. Elements are kept sorted by
/// encoding, so element indices order elements canonically and the identity
/// is always index 0. Multiplication is composition with the right factor
/// applied first: `(a * b)[i] = a[b[i]]`.
#[derive(Clone, Debug)]
pub struct GroupTable {
    name: String,
    degree: usize,
    data: Vec<u8>,
    generators: Vec<u32>,
}

pub(crate) fn is_permutation(images: &[u8], degree: usize) -> bool {
    if images.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &x in images {
        let x = x as usize;
        if x >= degree || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub(crate) fn compose_into(a: &[u8], b: &[u8], out: &mut [u8]) {
    for (o, &bi) in out.iter_mut().zip(b) {
        *o = a[bi as usize];
    }
}

pub(crate) fn invert_into(a: &[u8], out: &mut [u8]) {
    for (i, &ai) in a.iter().enumerate() {
        out[ai as usize] = i as u8;
    }
}

/// Order of a permutation: lcm of its cycle lengths.
pub(crate) fn permutation_order(a: &[u8]) -> u64 {
    let mut seen = vec![false; a.len()];
    let mut order = 1u64;
    for start in 0..a.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = a[x] as usize;
            len += 1;
        }
        order = num_integer::lcm(order, len);
    }
    order
}

impl GroupTable {
    /// Closes `generators` under composition by breadth-first search.
    /// Fails with [`Error::CapExceeded`] as soon as more than `cap` elements
    /// have been found.
    pub fn from_generators(
        name: impl Into<String>,
        degree: usize,
        generators: &[Vec<u8>],
        cap: u64,
    ) -> Result<Self> {
        if degree == 0 || degree > 256 {
            return Err(Error::InvalidArgument(format!(
                "permutation degree {degree} outside 1..=256"
            )));
        }
        for g in generators {
            if !is_permutation(g, degree) {
                return Err(Error::InvalidArgument(
                    "generator is not a permutation of the points".into(),
                ));
            }
        }
        let data = close(degree, generators, cap)?;
        let mut table = GroupTable {
            name: name.into(),
            degree,
            data,
            generators: Vec::new(),
        };
        table.canonicalize();
        table.generators = generators
            .iter()
            .map(|g| table.index_of(g).expect("generator lies in its closure"))
            .collect();
        Ok(table)
    }

    /// Builds a table from an explicit element list, which must be closed
    /// under composition and contain the generators.
    pub fn from_elements(
        name: impl Into<String>,
        degree: usize,
        elements: Vec<Vec<u8>>,
        generators: &[Vec<u8>],
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(elements.len() * degree);
        for e in &elements {
            if !is_permutation(e, degree) {
                return Err(Error::InvalidArgument(
                    "element is not a permutation of the points".into(),
                ));
            }
            data.extend_from_slice(e);
        }
        let mut table = GroupTable {
            name: name.into(),
            degree,
            data,
            generators: Vec::new(),
        };
        table.canonicalize();
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            gens.push(table.index_of(g).ok_or_else(|| {
                Error::InvalidArgument("generator missing from element list".into())
            })?);
        }
        table.generators = gens;
        Ok(table)
    }

    /// Rebuilds a table from its raw parts (used by the group cache). The
    /// data must already be sorted and deduplicated.
    pub(crate) fn from_raw(
        name: String,
        degree: usize,
        data: Vec<u8>,
        generators: Vec<u32>,
    ) -> Result<Self> {
        if degree == 0 || !data.len().is_multiple_of(degree) {
            return Err(Error::Cache("element data length mismatch".into()));
        }
        let table = GroupTable {
            name,
            degree,
            data,
            generators,
        };
        let sorted = (1..table.order()).all(|i| table.element(i - 1) < table.element(i));
        if !sorted || table.generators.iter().any(|&g| g as usize >= table.order()) {
            return Err(Error::Cache("element data not canonical".into()));
        }
        Ok(table)
    }

    fn canonicalize(&mut self) {
        let degree = self.degree;
        let data = &self.data;
        let mut order: Vec<u32> = (0..(data.len() / degree) as u32).collect();
        par::sort_by(&mut order, |&a, &b| {
            let a = a as usize * degree;
            let b = b as usize * degree;
            data[a..a + degree].cmp(&data[b..b + degree])
        });
        let mut sorted = Vec::with_capacity(data.len());
        let mut last: Option<&[u8]> = None;
        for &i in &order {
            let s = &data[i as usize * degree..(i as usize + 1) * degree];
            if last != Some(s) {
                sorted.extend_from_slice(s);
                last = Some(s);
            }
        }
        self.data = sorted;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.data.len() / self.degree
    }

    /// Flat element data, `order * degree` bytes.
    pub(crate) fn raw_data(&self) -> &[u8] {
        &self.data
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Canonical encoding of element `i`.
    pub fn element(&self, i: usize) -> &[u8] {
        &self.data[i * self.degree..(i + 1) * self.degree]
    }

    pub fn elements(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks_exact(self.degree)
    }

    /// Index of the element with the given encoding, if it lies in the group.
    pub fn index_of(&self, images: &[u8]) -> Option<u32> {
        if images.len() != self.degree {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.order());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.element(mid).cmp(images) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid as u32),
            }
        }
        None
    }

    fn lookup(&self, images: &[u8]) -> u32 {
        self.index_of(images)
            .expect("group table is closed under its operations")
    }

    pub fn multiply(&self, a: u32, b: u32) -> u32 {
        let mut out = vec![0u8; self.degree];
        compose_into(self.element(a as usize), self.element(b as usize), &mut out);
        self.lookup(&out)
    }

    pub fn invert(&self, a: u32) -> u32 {
        let mut out = vec![0u8; self.degree];
        invert_into(self.element(a as usize), &mut out);
        self.lookup(&out)
    }

    /// `w * x * w^-1`.
    pub fn conjugate(&self, w: u32, x: u32) -> u32 {
        let mut out = vec![0u8; self.degree];
        conjugate_into(self.element(w as usize), self.element(x as usize), &mut out);
        self.lookup(&out)
    }

    pub fn commute(&self, a: u32, b: u32) -> bool {
        commute(self.element(a as usize), self.element(b as usize))
    }

    pub fn element_order(&self, a: u32) -> u64 {
        permutation_order(self.element(a as usize))
    }

    /// Checks closure, identity and inverses exhaustively (and associativity
    /// on every triple of a small group) for orders up to
    /// [`EXHAUSTIVE_AXIOM_LIMIT`]; larger groups get seeded random probes.
    pub fn check_axioms(&self) -> bool {
        let n = self.order();
        if self.element(0).iter().enumerate().any(|(i, &x)| i != x as usize) {
            return false;
        }
        let degree = self.degree;
        let closed_pair = |a: usize, b: usize| {
            let mut out = vec![0u8; degree];
            compose_into(self.element(a), self.element(b), &mut out);
            self.index_of(&out).is_some()
        };
        let has_inverse = |a: usize| {
            let mut out = vec![0u8; degree];
            invert_into(self.element(a), &mut out);
            self.index_of(&out).is_some()
        };
        if n <= EXHAUSTIVE_AXIOM_LIMIT {
            let ok = par::filter_range(n, |a| !has_inverse(a) || (0..n).any(|b| !closed_pair(a, b)));
            if !ok.is_empty() {
                return false;
            }
            if n <= 64 {
                for a in 0..n as u32 {
                    for b in 0..n as u32 {
                        let ab = self.multiply(a, b);
                        for c in 0..n as u32 {
                            if self.multiply(ab, c) != self.multiply(a, self.multiply(b, c)) {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_0f2c_1a55);
            (0..AXIOM_PROBES).all(|_| {
                let a = rng.gen_range(0..n) as u32;
                let b = rng.gen_range(0..n) as u32;
                let c = rng.gen_range(0..n) as u32;
                let ab = self.multiply(a, b);
                self.multiply(ab, c) == self.multiply(a, self.multiply(b, c))
                    && self.multiply(a, self.invert(a)) == 0
            })
        }
    }
}

pub(crate) fn conjugate_into(w: &[u8], x: &[u8], out: &mut [u8]) {
    // (w x w^-1)[w[i]] = w[x[i]]
    for (i, &xi) in x.iter().enumerate() {
        out[w[i] as usize] = w[xi as usize];
    }
}

pub(crate) fn commute(a: &[u8], b: &[u8]) -> bool {
    (0..a.len()).all(|i| a[b[i] as usize] == b[a[i] as usize])
}

fn close(degree: usize, generators: &[Vec<u8>], cap: u64) -> Result<Vec<u8>> {
    let hasher = DefaultHashBuilder::default();
    let hash = |s: &[u8]| hasher.hash_one(s);
    let identity: Vec<u8> = (0..degree).map(|i| i as u8).collect();
    let mut data = identity.clone();
    let mut table: HashTable<u32> = HashTable::new();
    table.insert_unique(hash(&identity), 0, |_| unreachable!());
    let mut count: u64 = 1;
    if count > cap {
        return Err(Error::CapExceeded { order: count, cap });
    }
    let mut frontier: Vec<u32> = vec![0];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for chunk in frontier.chunks(CLOSURE_CHUNK) {
            let snapshot = &data;
            let products: Vec<Vec<(u64, Vec<u8>)>> = par::map(chunk, |&f| {
                let f = &snapshot[f as usize * degree..(f as usize + 1) * degree];
                generators
                    .iter()
                    .map(|g| {
                        let mut out = vec![0u8; degree];
                        compose_into(g, f, &mut out);
                        (hash(&out), out)
                    })
                    .collect()
            });
            for (h, p) in products.into_iter().flatten() {
                let present = table
                    .find(h, |&i| &data[i as usize * degree..(i as usize + 1) * degree] == p.as_slice())
                    .is_some();
                if present {
                    continue;
                }
                let idx = count as u32;
                data.extend_from_slice(&p);
                table.insert_unique(h, idx, |&i| {
                    hash(&data[i as usize * degree..(i as usize + 1) * degree])
                });
                next.push(idx);
                count += 1;
                if count > cap {
                    return Err(Error::CapExceeded { order: count, cap });
                }
            }
        }
        frontier = next;
    }
    Ok(data)
}
