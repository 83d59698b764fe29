//! Independent brute-force oracle: materialize a small permutation group
//! from standard generators, induce its Cayley table, and find the minimal
//! index of a proper subgroup by exhaustive enumeration. For a simple group
//! every proper subgroup is core-free, so this is the least faithful
//! transitive degree, computed with no reference to the formula layer.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fixtures::{self, OracleFixture};
use crate::out_groups::{self, FiniteGroupTable};

pub const MAX_DEGREE: usize = 16;
pub const ORDER_CAP: usize = 1_000;

/// A permutation of {0..degree-1}, stored by images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    degree: u8,
    images: [u8; MAX_DEGREE],
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        assert!(degree <= MAX_DEGREE);
        let mut images = [0u8; MAX_DEGREE];
        for (i, img) in images.iter_mut().enumerate() {
            *img = i as u8;
        }
        Permutation {
            degree: degree as u8,
            images,
        }
    }

    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        if images.len() > MAX_DEGREE {
            return Err(Error::OutOfRange(format!(
                "degree {} exceeds the supported {MAX_DEGREE}",
                images.len()
            )));
        }
        let mut seen = [false; MAX_DEGREE];
        let mut stored = [0u8; MAX_DEGREE];
        for (i, &img) in images.iter().enumerate() {
            if img >= images.len() || seen[img] {
                return Err(Error::InvalidAction(format!(
                    "images do not form a bijection at point {i}"
                )));
            }
            seen[img] = true;
            stored[i] = img as u8;
        }
        for (i, slot) in stored.iter_mut().enumerate().skip(images.len()) {
            *slot = i as u8;
        }
        Ok(Permutation {
            degree: images.len() as u8,
            images: stored,
        })
    }

    /// Parse disjoint cycle notation like `(0 1 2)(3 4)`; fixed points may be
    /// omitted. The degree is supplied by the caller.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..degree).collect();
        let text = text.trim();
        let mut rest = text;
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Syntax(format!("expected `(` in cycles `{text}`")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Syntax(format!("unbalanced `(` in `{text}`")))?;
            let body = &rest[1..close];
            let points: Vec<usize> = body
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Syntax(format!("bad point `{tok}` in `{text}`")))
                })
                .collect::<Result<_>>()?;
            for &pt in &points {
                if pt >= degree {
                    return Err(Error::OutOfRange(format!(
                        "point {pt} exceeds degree {degree}"
                    )));
                }
            }
            for w in 0..points.len() {
                images[points[w]] = points[(w + 1) % points.len()];
            }
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// self then other.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree, other.degree);
        let mut images = [0u8; MAX_DEGREE];
        for (img, &via) in images.iter_mut().zip(&self.images) {
            *img = other.images[via as usize];
        }
        Permutation {
            degree: self.degree,
            images,
        }
    }
}

/// A fully materialized permutation group.
#[derive(Debug, Clone)]
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub elements: Vec<Permutation>,
}

/// Breadth-first closure of the generators under composition.
pub fn generate_elements(gens: &[Permutation]) -> Result<PermGroup> {
    let degree = gens.first().map(|g| g.degree()).unwrap_or(1);
    for g in gens {
        if g.degree() != degree {
            return Err(Error::InvalidAction(
                "generators act on different degrees".into(),
            ));
        }
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(identity, 0)]);
    let mut frontier = vec![identity];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(y) {
                if elements.len() >= ORDER_CAP {
                    return Err(Error::OrderCapExceeded {
                        order: elements.len() as u64 + 1,
                        cap: ORDER_CAP as u64,
                    });
                }
                e.insert(elements.len());
                elements.push(y);
                frontier.push(y);
            }
        }
    }
    Ok(PermGroup {
        degree,
        generators: gens.to_vec(),
        elements,
    })
}

impl PermGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Induce the abstract multiplication table on the element list.
    pub fn cayley_table(&self) -> FiniteGroupTable {
        let n = self.elements.len();
        let index: HashMap<Permutation, u16> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, p)| (*p, i as u16))
            .collect();
        let mut mul = vec![0u16; n * n];
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                mul[i * n + j] = index[&a.compose(b)];
            }
        }
        let gens = self
            .generators
            .iter()
            .map(|g| index[g])
            .collect::<Vec<_>>();
        FiniteGroupTable::from_parts(n, mul, gens)
            .expect("closure of a permutation set is a group")
    }
}

/// Minimal index of a proper subgroup, by exhaustive subgroup enumeration on
/// the induced Cayley table. The caller guarantees the group is simple (so
/// every proper subgroup is core-free).
pub fn min_corefree_index(group: &PermGroup) -> Result<u64> {
    if group.order() > ORDER_CAP {
        return Err(Error::OrderCapExceeded {
            order: group.order() as u64,
            cap: ORDER_CAP as u64,
        });
    }
    let table = group.cayley_table();
    let orders = out_groups::subgroup_orders(&table)?;
    let n = group.order();
    let largest_proper = orders
        .iter()
        .copied()
        .find(|&o| o < n)
        .expect("nontrivial group has a proper subgroup");
    Ok((n / largest_proper) as u64)
}

/// Load a fixture row into a generated group.
pub fn fixture_group(fx: &OracleFixture) -> Result<PermGroup> {
    let g1 = Permutation::from_cycles(&fx.gen_cycles[0], fx.degree)?;
    let g2 = Permutation::from_cycles(&fx.gen_cycles[1], fx.degree)?;
    generate_elements(&[g1, g2])
}

pub fn fixture_by_name(name: &str) -> Result<(&'static OracleFixture, PermGroup)> {
    let fx = fixtures::oracle_fixture(name)
        .ok_or_else(|| Error::Syntax(format!("unknown oracle fixture `{name}`")))?;
    Ok((fx, fixture_group(fx)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_orders_match_fixture_groups() {
        let expect = [
            ("Alt(5)", 60usize),
            ("Alt(6)", 360),
            ("PSL(2,7)", 168),
            ("PSL(2,8)", 504),
            ("PSL(2,11)", 660),
        ];
        for (name, order) in expect {
            let (_, group) = fixture_by_name(name).unwrap();
            assert_eq!(group.order(), order, "{name}");
        }
    }

    #[test]
    fn trivial_group_from_no_generators() {
        let group = generate_elements(&[]).unwrap();
        assert_eq!(group.order(), 1);
    }

    #[test]
    fn alt5_from_explicit_cycles() {
        let five = Permutation::from_cycles("(0 1 2 3 4)", 5).unwrap();
        let three = Permutation::from_cycles("(0 1 2)", 5).unwrap();
        let group = generate_elements(&[five, three]).unwrap();
        assert_eq!(group.order(), 60);
        assert_eq!(min_corefree_index(&group).unwrap(), 5);
    }

    #[test]
    fn group_order_divides_degree_factorial() {
        for fx in fixtures::oracle_fixtures() {
            let group = fixture_group(fx).unwrap();
            let fact: u64 = (1..=group.degree as u64).product();
            assert_eq!(fact % group.order() as u64, 0, "{}", fx.name);
        }
    }

    #[test]
    fn cap_is_enforced() {
        // Alt(7) on 7 points has order 2520 > 1000
        let seven = Permutation::from_cycles("(0 1 2 3 4 5 6)", 7).unwrap();
        let three = Permutation::from_cycles("(0 1 2)", 7).unwrap();
        assert!(matches!(
            generate_elements(&[seven, three]),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn alt5_subgroup_count_is_59() {
        let (_, group) = fixture_by_name("Alt(5)").unwrap();
        let table = group.cayley_table();
        assert_eq!(out_groups::count_subgroups(&table).unwrap(), 59);
    }

    #[test]
    fn subgroup_orders_divide_group_order() {
        for name in ["Alt(5)", "PSL(2,7)"] {
            let (_, group) = fixture_by_name(name).unwrap();
            let table = group.cayley_table();
            for sub_order in out_groups::subgroup_orders(&table).unwrap() {
                assert_eq!(group.order() % sub_order, 0, "{name}");
            }
        }
    }

    #[test]
    fn bad_cycles_are_rejected() {
        assert!(Permutation::from_cycles("(0 1 2", 5).is_err());
        assert!(Permutation::from_cycles("(0 9)", 5).is_err());
        assert!(Permutation::from_cycles("0 1 2", 5).is_err());
    }
}
