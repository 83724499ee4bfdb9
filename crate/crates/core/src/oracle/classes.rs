use super::group::{conjugate_into, GroupTable};
use super::subgroup::{centralizer, subgroups_conjugate, SubgroupHandle};
use super::OracleConfig;
use crate::error::{Error, Result};
use crate::par;

/// One conjugacy class: its sorted member indices and its representative,
/// the member with the smallest canonical encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: u32,
    pub members: Vec<u32>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// The z-class partition of a group: conjugacy classes, the centralizer of
/// each class representative, and the grouping of class indices.
#[derive(Clone, Debug)]
pub struct ZClasses {
    pub classes: Vec<ConjugacyClass>,
    pub centralizers: Vec<SubgroupHandle>,
    /// Each entry lists indices into `classes`, in class order.
    pub groups: Vec<Vec<usize>>,
}

impl ZClasses {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn z_class_count(&self) -> usize {
        self.groups.len()
    }

    /// Class representatives, grouped by z-class.
    pub fn representatives(&self) -> Vec<Vec<u32>> {
        self.groups
            .iter()
            .map(|g| g.iter().map(|&c| self.classes[c].representative).collect())
            .collect()
    }

    /// Index of the z-class containing conjugacy class `class`.
    pub fn group_of_class(&self, class: usize) -> usize {
        self.groups
            .iter()
            .position(|g| g.contains(&class))
            .expect("every class lies in one group")
    }

    /// Index of the conjugacy class containing element `x`.
    pub fn class_of_element(&self, x: u32) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(x))
            .expect("classes partition the group")
    }
}

fn check_cap(group: &GroupTable, config: &OracleConfig) -> Result<()> {
    let order = group.order() as u64;
    if order > config.order_cap {
        return Err(Error::CapExceeded {
            order,
            cap: config.order_cap,
        });
    }
    Ok(())
}

/// Orbit partition of the group under conjugation, ordered by representative.
pub fn conjugacy_classes(group: &GroupTable, config: &OracleConfig) -> Result<Vec<ConjugacyClass>> {
    check_cap(group, config)?;
    let order = group.order();
    let gens = group.generators();
    let degree = group.degree();
    // Conjugates of every element by every generator, one data-parallel
    // pass per generator.
    let neighbours: Vec<Vec<u32>> = gens
        .iter()
        .map(|&s| {
            let se = group.element(s as usize);
            par::map_range(order, |x| {
                let mut out = vec![0u8; degree];
                conjugate_into(se, group.element(x), &mut out);
                group.index_of(&out).expect("closed group")
            })
        })
        .collect();
    let mut assigned = vec![false; order];
    let mut classes = Vec::new();
    for start in 0..order {
        if assigned[start] {
            continue;
        }
        assigned[start] = true;
        let mut members = vec![start as u32];
        let mut head = 0;
        while head < members.len() {
            let x = members[head] as usize;
            head += 1;
            for table in &neighbours {
                let y = table[x];
                if !assigned[y as usize] {
                    assigned[y as usize] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(ConjugacyClass {
            representative: start as u32,
            members,
        });
    }
    Ok(classes)
}

/// Groups conjugacy classes whose centralizers are conjugate. Classes are
/// visited in representative order; each joins the first existing group
/// whose centralizer is conjugate to its own, or opens a new group.
pub fn z_classes(group: &GroupTable, config: &OracleConfig) -> Result<ZClasses> {
    let classes = conjugacy_classes(group, config)?;
    let centralizers: Vec<SubgroupHandle> = classes
        .iter()
        .map(|c| centralizer(group, c.representative))
        .collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut heads: Vec<usize> = Vec::new();
    for (i, cen) in centralizers.iter().enumerate() {
        let found = heads.iter().position(|&h| {
            let other = &centralizers[h];
            other.order() == cen.order() && subgroups_conjugate(group, other, cen).is_some()
        });
        match found {
            Some(pos) => groups[pos].push(i),
            None => {
                heads.push(i);
                groups.push(vec![i]);
            }
        }
    }
    Ok(ZClasses {
        classes,
        centralizers,
        groups,
    })
}
