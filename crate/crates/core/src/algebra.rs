//! Finite Boolean algebras represented as powersets of named atoms.
//!
//! Elements are bitmasks over the atom list: bit `i` of an element's mask is
//! set iff atom `i` belongs to the subset. Index 0 is the least element `F`,
//! index `2^m - 1` the greatest element `T`. Every dense table in this crate
//! is indexed in this bitmask order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on atoms per algebra; keeps every dense table addressable.
pub const MAX_ATOMS: usize = 16;

/// A finite Boolean algebra given as the powerset of an ordered list of
/// distinct atom names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SignatureWire")]
pub struct AlgebraSignature {
    atoms: Vec<String>,
}

#[derive(Deserialize)]
struct SignatureWire {
    atoms: Vec<String>,
}

impl TryFrom<SignatureWire> for AlgebraSignature {
    type Error = Error;
    fn try_from(wire: SignatureWire) -> Result<Self> {
        AlgebraSignature::new(wire.atoms)
    }
}

impl AlgebraSignature {
    /// Builds a signature from atom names. Names must be non-empty and
    /// pairwise distinct; between 1 and [`MAX_ATOMS`] of them.
    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() || atoms.len() > MAX_ATOMS {
            return Err(Error::AtomCount {
                got: atoms.len(),
                max: MAX_ATOMS,
            });
        }
        for (i, name) in atoms.iter().enumerate() {
            if name.is_empty() || atoms[..i].contains(name) {
                return Err(Error::BadAtomName(name.clone()));
            }
        }
        Ok(Self { atoms })
    }

    /// Signature with atoms `<prefix>1 .. <prefix>count`.
    pub fn numbered(prefix: &str, count: usize) -> Result<Self> {
        Self::new((1..=count).map(|i| format!("{prefix}{i}")))
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    /// Number of elements, `2^m`.
    pub fn element_count(&self) -> usize {
        1 << self.atoms.len()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_index(&self, name: &str) -> Result<usize> {
        self.atoms
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    fn mask(&self) -> usize {
        self.element_count() - 1
    }

    /// Least element `F` (the empty subset).
    pub fn bottom(&self) -> Element<'_> {
        Element { bits: 0, algebra: self }
    }

    /// Greatest element `T` (the full atom set).
    pub fn top(&self) -> Element<'_> {
        Element { bits: self.mask(), algebra: self }
    }

    /// Element for a raw bitmask.
    pub fn element(&self, bits: usize) -> Result<Element<'_>> {
        if bits > self.mask() {
            return Err(Error::ElementOutOfRange {
                bits,
                atoms: self.atoms.len(),
            });
        }
        Ok(Element { bits, algebra: self })
    }

    /// Element holding exactly the named atoms.
    pub fn element_from_atoms<S: AsRef<str>>(&self, names: &[S]) -> Result<Element<'_>> {
        let mut bits = 0usize;
        for name in names {
            bits |= 1 << self.atom_index(name.as_ref())?;
        }
        Ok(Element { bits, algebra: self })
    }

    /// All elements in bitmask order (`F` first, `T` last).
    pub fn elements(&self) -> impl Iterator<Item = Element<'_>> {
        (0..self.element_count()).map(move |bits| Element { bits, algebra: self })
    }

    /// Atom names present in `bits`, sorted lexicographically. This is the
    /// JSON form of an element; `F` maps to the empty list.
    pub fn atom_names_of(&self, bits: usize) -> Vec<&str> {
        let mut names: Vec<&str> = self
            .atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, name)| name.as_str())
            .collect();
        names.sort_unstable();
        names
    }

    /// Compact human label for an element: `F`, `T`, or `{a,b}`.
    pub fn label(&self, bits: usize) -> String {
        if bits == 0 {
            "F".to_string()
        } else if bits == self.mask() {
            "T".to_string()
        } else {
            format!("{{{}}}", self.atom_names_of(bits).join(","))
        }
    }

    pub(crate) fn complement_bits(&self, bits: usize) -> usize {
        !bits & self.mask()
    }
}

impl fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{{{}}}", self.atoms.join(","))
    }
}

/// An element of a finite Boolean algebra: a subset of the atoms, borrowed
/// from its signature.
#[derive(Clone, Copy, Debug)]
pub struct Element<'a> {
    bits: usize,
    algebra: &'a AlgebraSignature,
}

impl<'a> Element<'a> {
    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn algebra(&self) -> &'a AlgebraSignature {
        self.algebra
    }

    pub fn is_bottom(&self) -> bool {
        self.bits == 0
    }

    pub fn is_top(&self) -> bool {
        self.bits == self.algebra.mask()
    }

    /// Complement within the algebra. An involution.
    pub fn complement(&self) -> Element<'a> {
        Element {
            bits: self.algebra.complement_bits(self.bits),
            algebra: self.algebra,
        }
    }

    /// `self ⇒ other`, i.e. `selfᶜ ∨ other = T`: subset containment.
    pub fn implies(&self, other: &Element<'a>) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn meet(&self, other: &Element<'a>) -> Result<Element<'a>> {
        self.check_same(other)?;
        Ok(Element {
            bits: self.bits & other.bits,
            algebra: self.algebra,
        })
    }

    pub fn join(&self, other: &Element<'a>) -> Result<Element<'a>> {
        self.check_same(other)?;
        Ok(Element {
            bits: self.bits | other.bits,
            algebra: self.algebra,
        })
    }

    /// Atom count of the element: its distance to `F` in the lattice.
    pub fn card(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn atom_names(&self) -> Vec<&'a str> {
        self.algebra.atom_names_of(self.bits)
    }

    fn check_same(&self, other: &Element<'a>) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.algebra.to_string(),
                right: other.algebra.to_string(),
            })
        }
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.algebra == other.algebra
    }
}

impl Eq for Element<'_> {}

impl fmt::Display for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.label(self.bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_oversized_signatures() {
        assert!(AlgebraSignature::new(Vec::<String>::new()).is_err());
        assert!(AlgebraSignature::numbered("a", 17).is_err());
        assert!(AlgebraSignature::numbered("a", 16).is_ok());
    }

    #[test]
    fn rejects_duplicate_and_empty_names() {
        assert!(AlgebraSignature::new(["x", "x"]).is_err());
        assert!(AlgebraSignature::new(["x", ""]).is_err());
    }

    #[test]
    fn complement_is_involution_and_swaps_extremes() {
        let alg = AlgebraSignature::new(["x", "y"]).unwrap();
        let x = alg.element_from_atoms(&["x"]).unwrap();
        assert_eq!(x.complement().atom_names(), vec!["y"]);
        assert_eq!(x.complement().complement(), x);
        assert!(alg.bottom().complement().is_top());
        assert!(alg.top().complement().is_bottom());
    }

    #[test]
    fn implies_is_subset_containment() {
        let alg = AlgebraSignature::new(["x", "y"]).unwrap();
        let x = alg.element_from_atoms(&["x"]).unwrap();
        let y = alg.element_from_atoms(&["y"]).unwrap();
        let top = alg.top();
        assert!(x.implies(&top).unwrap());
        assert!(alg.bottom().implies(&y).unwrap());
        assert!(!x.implies(&y).unwrap());
    }

    #[test]
    fn meet_join_card() {
        let alg = AlgebraSignature::new(["x", "y"]).unwrap();
        let x = alg.element_from_atoms(&["x"]).unwrap();
        let y = alg.element_from_atoms(&["y"]).unwrap();
        let top = alg.top();
        assert_eq!(x.meet(&top).unwrap(), x);
        assert_eq!(x.join(&y).unwrap(), top);
        assert_eq!(top.card(), 2);
    }

    #[test]
    fn cross_algebra_operations_fail() {
        let a = AlgebraSignature::new(["x"]).unwrap();
        let b = AlgebraSignature::new(["y"]).unwrap();
        let ea = a.top();
        let eb = b.top();
        assert!(ea.implies(&eb).is_err());
        assert!(ea.meet(&eb).is_err());
    }

    #[test]
    fn element_serialization_order() {
        let alg = AlgebraSignature::new(["y", "x"]).unwrap();
        assert_eq!(alg.atom_names_of(0b11), vec!["x", "y"]);
        assert_eq!(alg.atom_names_of(0), Vec::<&str>::new());
        assert_eq!(alg.label(0), "F");
        assert_eq!(alg.label(0b11), "T");
        assert_eq!(alg.label(0b01), "{y}");
    }
}
