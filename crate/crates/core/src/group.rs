//! Finite matrix groups over a cyclotomic field.
//!
//! A group is enumerated by breadth-first closure of its generators under
//! multiplication (deterministic insertion order, identity first). On top
//! of the closure sit conjugacy classes, fixed subspaces `V^g` in
//! canonical echelon form, and the verdicts about codimension-2 fixed
//! spaces: whether each set `{g : V^g = H}` is exactly one conjugacy
//! class, the McKay count of classes meeting it, the analogous check for
//! complex reflections, and the `GL(2)` uniqueness consequence.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::cyclo::{Cyclo, CycloField};
use crate::error::Error;
use crate::linalg::{self, FieldOps, Matrix};

/// Default element cap for [`group_closure`].
pub const CLOSURE_CAP: usize = 100_000;

/// A square matrix over the cyclotomic field.
pub type GroupMatrix = Matrix<Cyclo>;

/// A subspace of `V` in canonical reduced-echelon form; equal subspaces
/// compare equal componentwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subspace {
    basis: GroupMatrix,
    ambient: usize,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Basis vectors as rows of an echelon matrix.
    pub fn basis(&self) -> &GroupMatrix {
        &self.basis
    }
}

/// An enumerated finite subgroup of `GL(V)` over `Q(zeta_m)`.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    field: CycloField,
    dim: usize,
    elements: Vec<GroupMatrix>,
    inverses: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

/// Breadth-first closure of the generators under multiplication.
///
/// The identity is element 0; elements appear in discovery order, which
/// makes every downstream listing deterministic. Exceeding `cap` signals
/// a non-finite (or just too large) input.
pub fn group_closure(
    field: CycloField,
    dim: usize,
    generators: Vec<GroupMatrix>,
    cap: usize,
) -> Result<MatrixGroup, Error> {
    for g in &generators {
        if g.rows() != dim || g.cols() != dim {
            return Err(Error::ShapeMismatch);
        }
    }
    let identity = linalg::identity(&field, dim);
    let mut elements = alloc::vec![identity.clone()];
    let mut index = BTreeMap::from([(identity, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &generators {
            let prod = linalg::mat_mul(&field, &elements[i], g)?;
            if index.contains_key(&prod) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::ClosureCapExceeded { cap });
            }
            index.insert(prod.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(prod);
        }
    }
    // A finite closure of invertible matrices is a group; a singular
    // generator shows up here as a missing inverse.
    let mut inverses = Vec::with_capacity(elements.len());
    for e in &elements {
        let inv = linalg::invert(&field, e)
            .and_then(|m| index.get(&m).copied())
            .ok_or_else(|| {
                Error::Inconsistency(String::from("closure is not a group: inverse missing"))
            })?;
        inverses.push(inv);
    }
    let (classes, class_of) = conjugacy_partition(&field, &elements, &index, &inverses)?;
    Ok(MatrixGroup {
        field,
        dim,
        elements,
        inverses,
        classes,
        class_of,
    })
}

fn conjugacy_partition(
    field: &CycloField,
    elements: &[GroupMatrix],
    index: &BTreeMap<GroupMatrix, usize>,
    inverses: &[usize],
) -> Result<(Vec<Vec<usize>>, Vec<usize>), Error> {
    let n = elements.len();
    let mut class_of = alloc::vec![usize::MAX; n];
    let mut classes = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        let mut members = BTreeSet::new();
        for h in 0..n {
            let hg = linalg::mat_mul(field, &elements[h], &elements[i])?;
            let conj = linalg::mat_mul(field, &hg, &elements[inverses[h]])?;
            let idx = *index.get(&conj).ok_or_else(|| {
                Error::Inconsistency(String::from("conjugate escaped the closure"))
            })?;
            members.insert(idx);
        }
        let members: Vec<usize> = members.into_iter().collect();
        for &m in &members {
            class_of[m] = cid;
        }
        classes.push(members);
    }
    Ok((classes, class_of))
}

impl MatrixGroup {
    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupMatrix {
        &self.elements[i]
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Conjugacy classes as sorted index lists, indexed by discovery order
    /// of their smallest element.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Multiplicative order of element `i`.
    pub fn element_order(&self, i: usize) -> Result<usize, Error> {
        let identity = linalg::identity(&self.field, self.dim);
        let mut power = self.elements[i].clone();
        for ord in 1..=self.elements.len() {
            if power == identity {
                return Ok(ord);
            }
            power = linalg::mat_mul(&self.field, &power, &self.elements[i])?;
        }
        Err(Error::Inconsistency(String::from(
            "element order exceeds the group order",
        )))
    }

    /// The fixed subspace `V^g = ker(g - 1)` in canonical echelon form.
    pub fn fixed_subspace(&self, i: usize) -> Result<Subspace, Error> {
        fixed_subspace(&self.field, &self.elements[i], self.dim)
    }

    /// Groups the non-identity elements by their exact fixed subspace.
    pub fn elements_by_fixed_space(&self) -> Result<BTreeMap<Subspace, Vec<usize>>, Error> {
        let mut map: BTreeMap<Subspace, Vec<usize>> = BTreeMap::new();
        for i in 1..self.elements.len() {
            map.entry(self.fixed_subspace(i)?).or_default().push(i);
        }
        Ok(map)
    }
}

/// `V^g` for an arbitrary matrix.
pub fn fixed_subspace(field: &CycloField, g: &GroupMatrix, dim: usize) -> Result<Subspace, Error> {
    let identity = linalg::identity(field, dim);
    let shifted = linalg::mat_sub(field, g, &identity)?;
    let kernel = linalg::nullspace(field, &shifted);
    Ok(Subspace {
        basis: linalg::row_space_canonical(field, &kernel, dim),
        ambient: dim,
    })
}

/// The image `h . W` of a subspace under a group element, re-canonicalized.
pub fn transform_subspace(
    field: &CycloField,
    h: &GroupMatrix,
    s: &Subspace,
) -> Result<Subspace, Error> {
    let mut rows = Vec::with_capacity(s.basis.rows());
    for r in 0..s.basis.rows() {
        // Basis vectors are column vectors stored as rows: v -> h v.
        let v = s.basis.row(r);
        let mut image = Vec::with_capacity(s.ambient);
        for i in 0..s.ambient {
            let mut acc = field.zero();
            for (j, vj) in v.iter().enumerate() {
                acc = field.add(&acc, &field.mul(h.at(i, j), vj));
            }
            image.push(acc);
        }
        rows.push(image);
    }
    Ok(Subspace {
        basis: linalg::row_space_canonical(field, &rows, s.ambient),
        ambient: s.ambient,
    })
}

/// Per-subspace record for the codimension-2 condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimTwoWitness {
    pub subspace: Subspace,
    /// Elements with exactly this fixed space.
    pub elements: Vec<usize>,
    /// Conjugacy classes meeting that set (the McKay component count).
    pub class_count: usize,
    /// Whether the set is exactly one full conjugacy class.
    pub single_class: bool,
}

/// Outcome of the fixed-space analysis of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// For every codimension-2 subspace `H`, `{g : V^g = H}` is a single
    /// conjugacy class.
    pub condition_holds: bool,
    pub witnesses: Vec<CodimTwoWitness>,
    /// Whether the complex reflections form at most one conjugacy class.
    pub reflection_single_class: bool,
    /// For 2-dimensional `V` only: whether `(T*C^2)/G` has at most one
    /// projective symplectic resolution.
    pub gl2_uniqueness: Option<bool>,
}

/// Tests the hypothesis that for every codimension-2 subspace `H`, the
/// set `{g : V^g = H}` forms a single conjugacy class.
///
/// The check is strict set equality with one full class; when the set
/// merely sits inside one class (`class_count == 1` but not the whole
/// class) the witness records the difference.
pub fn codim2_single_class_check(group: &MatrixGroup) -> Result<Verdict, Error> {
    let by_space = group.elements_by_fixed_space()?;
    let mut witnesses = Vec::new();
    let mut condition_holds = true;
    for (subspace, elements) in &by_space {
        if subspace.codim() != 2 {
            continue;
        }
        let classes: BTreeSet<usize> = elements.iter().map(|&i| group.class_of(i)).collect();
        let single_class = classes.len() == 1 && {
            let class = &group.conjugacy_classes()[*classes.iter().next().expect("nonempty")];
            class == elements
        };
        condition_holds &= single_class;
        witnesses.push(CodimTwoWitness {
            subspace: subspace.clone(),
            elements: elements.clone(),
            class_count: classes.len(),
            single_class,
        });
    }
    let reflection_single_class = reflection_class_check(group)?;
    let gl2_uniqueness = if group.dim() == 2 {
        Some(gl2_unique(group, &by_space))
    } else {
        None
    };
    Ok(Verdict {
        condition_holds,
        witnesses,
        reflection_single_class,
        gl2_uniqueness,
    })
}

/// Number of conjugacy classes meeting `{h : V^h = H}` for a
/// codimension-2 subspace `H` — the number of codimension-2 components of
/// the resolution fiber over the associated stratum.
pub fn mckay_component_count(group: &MatrixGroup, subspace: &Subspace) -> Result<usize, Error> {
    if subspace.codim() != 2 {
        return Err(Error::WrongCodimension {
            expected: 2,
            got: subspace.codim(),
        });
    }
    let by_space = group.elements_by_fixed_space()?;
    let Some(elements) = by_space.get(subspace) else {
        return Ok(0);
    };
    let classes: BTreeSet<usize> = elements.iter().map(|&i| group.class_of(i)).collect();
    Ok(classes.len())
}

/// Whether the complex reflections (codimension-1 fixed space) are empty
/// or form a single conjugacy class. The reflection set is stable under
/// conjugation, so counting classes suffices.
pub fn reflection_class_check(group: &MatrixGroup) -> Result<bool, Error> {
    let mut classes = BTreeSet::new();
    for i in 1..group.order() {
        if group.fixed_subspace(i)?.codim() == 1 {
            classes.insert(group.class_of(i));
        }
    }
    Ok(classes.len() <= 1)
}

fn gl2_unique(group: &MatrixGroup, by_space: &BTreeMap<Subspace, Vec<usize>>) -> bool {
    // Elements with every eigenvalue different from 1 are exactly those
    // with V^g = 0; that set is conjugation-stable.
    let classes: BTreeSet<usize> = by_space
        .iter()
        .filter(|(s, _)| s.dim() == 0)
        .flat_map(|(_, els)| els.iter().map(|&i| group.class_of(i)))
        .collect();
    classes.len() <= 1
}

/// The `GL(2)` uniqueness verdict: `(T*C^2)/G` admits at most one
/// projective symplectic resolution iff the elements with all eigenvalues
/// different from 1 form a single conjugacy class.
pub fn gl2_verdict(group: &MatrixGroup) -> Result<Verdict, Error> {
    if group.dim() != 2 {
        return Err(Error::Precondition(String::from(
            "GL(2) verdict needs a 2-dimensional representation",
        )));
    }
    codim2_single_class_check(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use num_rational::BigRational;

    fn mat(field: &CycloField, entries: &[&[i64]]) -> GroupMatrix {
        Matrix::from_rows(
            entries
                .iter()
                .map(|row| row.iter().map(|&v| field.from_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// sigma (x,y) -> (x,-y), tau (x,y) -> (y,x): dihedral of order 8.
    fn dihedral8() -> MatrixGroup {
        let field = CycloField::new(4).unwrap();
        let sigma = mat(&field, &[&[1, 0], &[0, -1]]);
        let tau = mat(&field, &[&[0, 1], &[1, 0]]);
        group_closure(field, 2, alloc::vec![sigma, tau], CLOSURE_CAP).unwrap()
    }

    /// sigma (x,y) -> (-x,y), tau (x,y) -> (x,-y): Klein four-group.
    fn klein() -> MatrixGroup {
        let field = CycloField::new(4).unwrap();
        let sigma = mat(&field, &[&[-1, 0], &[0, 1]]);
        let tau = mat(&field, &[&[1, 0], &[0, -1]]);
        group_closure(field, 2, alloc::vec![sigma, tau], CLOSURE_CAP).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(dihedral8().order(), 8);
        assert_eq!(klein().order(), 4);
        let field = CycloField::new(1).unwrap();
        let trivial = group_closure(field, 2, alloc::vec![], CLOSURE_CAP).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn closure_cap_detects_infinite_groups() {
        let field = CycloField::new(1).unwrap();
        let shear = mat(&field, &[&[1, 1], &[0, 1]]);
        assert_eq!(
            group_closure(field, 2, alloc::vec![shear], 50).unwrap_err(),
            Error::ClosureCapExceeded { cap: 50 }
        );
    }

    #[test]
    fn conjugacy_class_counts() {
        assert_eq!(dihedral8().conjugacy_classes().len(), 5);
        // Abelian: all classes are singletons.
        let k = klein();
        assert_eq!(k.conjugacy_classes().len(), 4);
        assert!(k.conjugacy_classes().iter().all(|c| c.len() == 1));
        // The identity is always a singleton class.
        assert_eq!(dihedral8().conjugacy_classes()[0], alloc::vec![0]);
    }

    #[test]
    fn fixed_subspace_examples() {
        let g = dihedral8();
        assert_eq!(g.fixed_subspace(0).unwrap().codim(), 0);
        // sigma fixes the x-axis.
        assert_eq!(g.fixed_subspace(1).unwrap().codim(), 1);
        // -identity fixes only the origin.
        let field = g.field().clone();
        let minus = mat(&field, &[&[-1, 0], &[0, -1]]);
        let idx = g.elements().iter().position(|e| *e == minus).unwrap();
        assert_eq!(g.fixed_subspace(idx).unwrap().dim(), 0);
    }

    #[test]
    fn dihedral_fails_the_codim2_condition() {
        let verdict = codim2_single_class_check(&dihedral8()).unwrap();
        assert!(!verdict.condition_holds);
        assert_eq!(verdict.witnesses.len(), 1);
        let w = &verdict.witnesses[0];
        assert_eq!(w.subspace.dim(), 0);
        // -1 and the two rotations of order 4: two classes.
        assert_eq!(w.elements.len(), 3);
        assert_eq!(w.class_count, 2);
        assert!(!w.single_class);
        assert_eq!(verdict.gl2_uniqueness, Some(false));
    }

    #[test]
    fn klein_satisfies_the_codim2_condition() {
        let verdict = codim2_single_class_check(&klein()).unwrap();
        assert!(verdict.condition_holds);
        assert_eq!(verdict.witnesses.len(), 1);
        let w = &verdict.witnesses[0];
        assert_eq!(w.elements.len(), 1);
        assert_eq!(w.class_count, 1);
        assert!(w.single_class);
        assert_eq!(verdict.gl2_uniqueness, Some(true));
        // sigma and tau are non-conjugate reflections, so the older
        // reflection criterion does not apply here.
        assert!(!verdict.reflection_single_class);
    }

    #[test]
    fn trivial_group_is_vacuously_fine() {
        let field = CycloField::new(1).unwrap();
        let trivial = group_closure(field, 2, alloc::vec![], CLOSURE_CAP).unwrap();
        let verdict = codim2_single_class_check(&trivial).unwrap();
        assert!(verdict.condition_holds);
        assert!(verdict.witnesses.is_empty());
        assert!(verdict.reflection_single_class);
        assert_eq!(verdict.gl2_uniqueness, Some(true));
    }

    #[test]
    fn mckay_counts() {
        let d8 = dihedral8();
        let origin = d8
            .elements_by_fixed_space()
            .unwrap()
            .into_keys()
            .find(|s| s.dim() == 0)
            .unwrap();
        assert_eq!(mckay_component_count(&d8, &origin).unwrap(), 2);
        assert_eq!(mckay_component_count(&klein(), &origin).unwrap(), 1);
        // Wrong codimension is rejected.
        let line = d8.fixed_subspace(1).unwrap();
        assert!(matches!(
            mckay_component_count(&d8, &line),
            Err(Error::WrongCodimension { .. })
        ));
    }

    #[test]
    fn verdict_agrees_with_mckay_counts() {
        // The condition holds exactly when every occurring codim-2 fixed
        // space has McKay count 1 and its element set is one full class.
        for group in [dihedral8(), klein()] {
            let verdict = codim2_single_class_check(&group).unwrap();
            let mut all_single = true;
            for w in &verdict.witnesses {
                assert_eq!(
                    mckay_component_count(&group, &w.subspace).unwrap(),
                    w.class_count
                );
                all_single &= w.single_class;
            }
            assert_eq!(verdict.condition_holds, all_single);
        }
    }

    #[test]
    fn reflection_checks() {
        assert!(!reflection_class_check(&klein()).unwrap());
        // A single reflection generates a group whose reflections form
        // one class.
        let field = CycloField::new(1).unwrap();
        let sigma = mat(&field, &[&[1, 0], &[0, -1]]);
        let cyclic = group_closure(field, 2, alloc::vec![sigma], CLOSURE_CAP).unwrap();
        assert!(reflection_class_check(&cyclic).unwrap());
        // No reflections at all: vacuously true.
        let field = CycloField::new(1).unwrap();
        let minus = mat(&field, &[&[-1, 0], &[0, -1]]);
        let pm = group_closure(field, 2, alloc::vec![minus], CLOSURE_CAP).unwrap();
        assert!(reflection_class_check(&pm).unwrap());
    }

    #[test]
    fn gl2_requires_dim_two() {
        let field = CycloField::new(1).unwrap();
        let g = group_closure(field, 3, alloc::vec![], CLOSURE_CAP).unwrap();
        assert!(gl2_verdict(&g).is_err());
    }

    #[test]
    fn element_powers_hit_the_identity_exactly() {
        for group in [dihedral8(), klein()] {
            let identity = linalg::identity(group.field(), group.dim());
            for i in 0..group.order() {
                let ord = group.element_order(i).unwrap();
                let mut power = linalg::identity(group.field(), group.dim());
                for _ in 0..ord {
                    power = linalg::mat_mul(group.field(), &power, group.element(i)).unwrap();
                }
                assert_eq!(power, identity);
            }
        }
    }

    #[test]
    fn fixed_spaces_are_conjugation_equivariant() {
        let g = dihedral8();
        for i in 0..g.order() {
            for h in 0..g.order() {
                let hg = linalg::mat_mul(g.field(), g.element(h), g.element(i)).unwrap();
                let conj = linalg::mat_mul(g.field(), &hg, g.element(g.inverse_index(h))).unwrap();
                let idx = g.elements().iter().position(|e| *e == conj).unwrap();
                let lhs = g.fixed_subspace(idx).unwrap();
                let rhs =
                    transform_subspace(g.field(), g.element(h), &g.fixed_subspace(i).unwrap())
                        .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let g = dihedral8();
        let field = g.field().clone();
        let reclosed = group_closure(field, 2, g.elements().to_vec(), CLOSURE_CAP).unwrap();
        assert_eq!(reclosed.order(), g.order());
    }

    #[test]
    fn rational_entries_parse_into_cyclo() {
        // Exercise the rational embedding used by file input.
        let field = CycloField::new(4).unwrap();
        let half = field.from_rational(rat(1) / rat(2));
        let two = field.from_int(2);
        assert_eq!(field.mul(&half, &two), field.one());
        let parsed: BigRational = "1/2".parse().unwrap();
        assert_eq!(field.from_rational(parsed), half);
    }
}
