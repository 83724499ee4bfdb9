//! Root systems of the exceptional types and the reflection groups they
//! generate, realized as permutation groups on the roots.
//!
//! Coordinates (Euclidean, exact over `Q(sqrt 5)`; `t` is the golden ratio):
//!
//! * F4: `e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2`.
//! * E6, E7: the first six or seven simple roots of E8 in the even
//!   coordinate system, `(e1+e8)/2 - (e2+...+e7)/2, e1+e2, e2-e1, e3-e2,
//!   e4-e3, e5-e4, e6-e5`.
//! * H3: `(2,0,0), (-t,1,1/t), (0,-2,0)`.
//! * H4: `(2,0,0,0), (-t,-1,-1/t,0), (0,1,t,-1/t), (0,1/t,-1,t)`.
//! * A_n (used only to cross-check the symmetric-group oracle):
//!   `e_i - e_{i+1}` in dimension `n+1`.

use std::collections::HashMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_traits::{One, Zero};

use crate::closed_form::IrreducibleType;
use crate::error::{Error, Result};
use crate::oracle::GroupTable;
use crate::quadratic::QuadraticNumber as Q;

pub type Vector = Vec<Q>;

/// A finite root system with its simple roots and the permutation of the
/// roots induced by each simple reflection.
#[derive(Clone, Debug)]
pub struct RootSystem {
    name: String,
    simple_roots: Vec<Vector>,
    roots: Vec<Vector>,
    reflection_tables: Vec<Vec<u32>>,
}

fn dot(u: &[Q], v: &[Q]) -> Q {
    u.iter()
        .zip(v)
        .fold(Q::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// `v - 2<v,a>/<a,a> a`.
pub fn reflect(v: &[Q], alpha: &[Q]) -> Vector {
    let c = &(&dot(v, alpha) * &Q::from_int(2)) / &dot(alpha, alpha);
    v.iter().zip(alpha).map(|(x, a)| x - &(&c * a)).collect()
}

fn ints(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Q::from_int(x)).collect()
}

fn halves(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Q::from_ratio(x, 2)).collect()
}

fn e8_simple_roots() -> Vec<Vector> {
    let mut roots = vec![halves(&[1, -1, -1, -1, -1, -1, -1, 1])];
    let mut e1_plus_e2 = vec![0; 8];
    e1_plus_e2[0] = 1;
    e1_plus_e2[1] = 1;
    roots.push(ints(&e1_plus_e2));
    for i in 0..6 {
        let mut r = vec![0; 8];
        r[i] = -1;
        r[i + 1] = 1;
        roots.push(ints(&r));
    }
    roots
}

fn simple_roots_of(t: &IrreducibleType) -> Result<Vec<Vector>> {
    let tau = Q::golden();
    let inv = tau.inverse().expect("nonzero");
    let zero = Q::zero();
    let two = Q::from_int(2);
    Ok(match t {
        IrreducibleType::F4 => vec![
            ints(&[0, 1, -1, 0]),
            ints(&[0, 0, 1, -1]),
            ints(&[0, 0, 0, 1]),
            halves(&[1, -1, -1, -1]),
        ],
        IrreducibleType::E6 => e8_simple_roots().into_iter().take(6).collect(),
        IrreducibleType::E7 => e8_simple_roots().into_iter().take(7).collect(),
        IrreducibleType::H3 => vec![
            vec![two.clone(), zero.clone(), zero.clone()],
            vec![-&tau, Q::one(), inv.clone()],
            vec![zero.clone(), -&two, zero.clone()],
        ],
        IrreducibleType::H4 => vec![
            vec![two, zero.clone(), zero.clone(), zero.clone()],
            vec![-&tau, Q::from_int(-1), -&inv, zero.clone()],
            vec![zero.clone(), Q::one(), tau.clone(), -&inv],
            vec![zero, inv, Q::from_int(-1), tau],
        ],
        IrreducibleType::E8 => {
            return Err(Error::Unsupported(
                "E8 (order 696729600) is beyond the oracle; its count is a table lookup".into(),
            ))
        }
        other => {
            return Err(Error::Unsupported(format!(
                "{other} is not built from a root system here"
            )))
        }
    })
}

/// Number of roots for each supported type.
fn expected_root_count(t: &IrreducibleType) -> Option<usize> {
    match t {
        IrreducibleType::H3 => Some(30),
        IrreducibleType::F4 => Some(48),
        IrreducibleType::E6 => Some(72),
        IrreducibleType::H4 => Some(120),
        IrreducibleType::E7 => Some(126),
        IrreducibleType::A(n) => Some((n * (n + 1)) as usize),
        _ => None,
    }
}

/// Builds the root system of an exceptional type F4, E6, E7, H3 or H4.
pub fn build_root_system(t: &IrreducibleType) -> Result<RootSystem> {
    let simple = simple_roots_of(t)?;
    let rs = RootSystem::close(t.to_string(), simple);
    check_count(t, rs)
}

/// Root system of type `A_n` (roots `e_i - e_j` in dimension `n+1`). Its
/// reflection group is `S_{n+1}` acting on roots, an independent model of
/// the group the symmetric-group builder produces on points.
pub fn type_a_root_system(n: u32) -> Result<RootSystem> {
    if !(1..=15).contains(&n) {
        return Err(Error::InvalidArgument(format!("A{n}: rank outside 1..=15")));
    }
    let dim = n as usize + 1;
    let simple = (0..n as usize)
        .map(|i| {
            let mut r = vec![0; dim];
            r[i] = 1;
            r[i + 1] = -1;
            ints(&r)
        })
        .collect();
    let t = IrreducibleType::A(n);
    check_count(&t, RootSystem::close(t.to_string(), simple))
}

fn check_count(t: &IrreducibleType, rs: RootSystem) -> Result<RootSystem> {
    match expected_root_count(t) {
        Some(k) if k != rs.roots.len() => Err(Error::InvalidArgument(format!(
            "{t}: closure produced {} roots, expected {k}",
            rs.roots.len()
        ))),
        _ => Ok(rs),
    }
}

impl RootSystem {
    /// Saturates the simple roots under the simple reflections, recording
    /// roots in discovery order.
    fn close(name: String, simple_roots: Vec<Vector>) -> Self {
        let mut index: HashMap<Vector, u32> = HashMap::new();
        let mut roots: Vec<Vector> = Vec::new();
        for r in &simple_roots {
            if !index.contains_key(r) {
                index.insert(r.clone(), roots.len() as u32);
                roots.push(r.clone());
            }
        }
        let mut head = 0;
        while head < roots.len() {
            let v = roots[head].clone();
            head += 1;
            for a in &simple_roots {
                let w = reflect(&v, a);
                if !index.contains_key(&w) {
                    index.insert(w.clone(), roots.len() as u32);
                    roots.push(w);
                }
            }
        }
        let reflection_tables = simple_roots
            .iter()
            .map(|a| roots.iter().map(|v| index[&reflect(v, a)]).collect())
            .collect();
        RootSystem {
            name,
            simple_roots,
            roots,
            reflection_tables,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    /// `tables[i][j]` is the index of the reflection of root `j` in simple
    /// root `i`.
    pub fn reflection_tables(&self) -> &[Vec<u32>] {
        &self.reflection_tables
    }

    pub fn inner_product(u: &[Q], v: &[Q]) -> Q {
        dot(u, v)
    }
}

/// Closes the simple reflections, as permutations of the roots, into the
/// full reflection group.
pub fn generate_group(rs: &RootSystem, order_cap: u64) -> Result<GroupTable> {
    if rs.roots.len() > 256 {
        return Err(Error::Unsupported(format!(
            "{}: {} roots exceed the 256-point encoding",
            rs.name,
            rs.roots.len()
        )));
    }
    let gens: Vec<Vec<u8>> = rs
        .reflection_tables
        .iter()
        .map(|t| t.iter().map(|&x| x as u8).collect())
        .collect();
    GroupTable::from_generators(rs.name.clone(), rs.roots.len(), &gens, order_cap)
}

const CACHE_MAGIC: &[u8; 4] = b"ZCGT";
const CACHE_FORMAT: u32 = 1;

fn cache_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("{name}-v{}.zcg", env!("CARGO_PKG_VERSION")))
}

fn encode(table: &GroupTable) -> Vec<u8> {
    let mut out = Vec::with_capacity(table.raw_data().len() + 64);
    out.extend_from_slice(CACHE_MAGIC);
    out.extend_from_slice(&CACHE_FORMAT.to_le_bytes());
    for s in [env!("CARGO_PKG_VERSION"), table.name()] {
        out.extend_from_slice(&(s.len() as u32).to_le_bytes());
        out.extend_from_slice(s.as_bytes());
    }
    out.extend_from_slice(&(table.degree() as u32).to_le_bytes());
    out.extend_from_slice(&(table.generators().len() as u32).to_le_bytes());
    for &g in table.generators() {
        out.extend_from_slice(&g.to_le_bytes());
    }
    out.extend_from_slice(&(table.order() as u64).to_le_bytes());
    out.extend_from_slice(table.raw_data());
    out
}

struct Reader<'a>(&'a [u8]);

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.0.len() < n {
            return Err(Error::Cache("truncated file".into()));
        }
        let (head, tail) = self.0.split_at(n);
        self.0 = tail;
        Ok(head)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }

    fn string(&mut self) -> Result<String> {
        let len = self.u32()? as usize;
        String::from_utf8(self.take(len)?.to_vec()).map_err(|_| Error::Cache("bad string".into()))
    }
}

fn decode(bytes: &[u8], expected_name: &str) -> Result<GroupTable> {
    let mut r = Reader(bytes);
    if r.take(4)? != CACHE_MAGIC || r.u32()? != CACHE_FORMAT {
        return Err(Error::Cache("unrecognized header".into()));
    }
    if r.string()? != env!("CARGO_PKG_VERSION") {
        return Err(Error::Cache("written by another version".into()));
    }
    let name = r.string()?;
    if name != expected_name {
        return Err(Error::Cache(format!("holds {name}, not {expected_name}")));
    }
    let degree = r.u32()? as usize;
    let ngens = r.u32()? as usize;
    let gens = (0..ngens).map(|_| r.u32()).collect::<Result<Vec<_>>>()?;
    let order = r.u64()? as usize;
    let data = r.take(order * degree)?.to_vec();
    if !r.0.is_empty() {
        return Err(Error::Cache("trailing bytes".into()));
    }
    GroupTable::from_raw(name, degree, data, gens)
}

/// Like [`generate_group`], but reuses a table saved under `cache_dir` by an
/// earlier run of the same crate version. Unreadable or stale cache files
/// are regenerated and overwritten.
pub fn generate_group_cached(
    rs: &RootSystem,
    order_cap: u64,
    cache_dir: Option<&Path>,
) -> Result<GroupTable> {
    let Some(dir) = cache_dir else {
        return generate_group(rs, order_cap);
    };
    let path = cache_path(dir, &rs.name);
    if let Ok(bytes) = fs::read(&path) {
        if let Ok(table) = decode(&bytes, &rs.name) {
            if (table.order() as u64) <= order_cap {
                return Ok(table);
            }
            return Err(Error::CapExceeded {
                order: table.order() as u64,
                cap: order_cap,
            });
        }
    }
    let table = generate_group(rs, order_cap)?;
    fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(|e| Error::Cache(e.to_string()))?;
    f.write_all(&encode(&table))
        .and_then(|_| f.sync_all())
        .and_then(|_| fs::rename(&tmp, &path))
        .map_err(|e| Error::Cache(e.to_string()))?;
    Ok(table)
}
