//! Gluing silting objects along the recollements of the Kronecker derived
//! category, and the classification list they reproduce.

use std::collections::BTreeSet;
use std::fmt;

use super::complex::{check_pair_hypotheses, cocone, derived_hom_dim, universal_map};
use super::{explicit_rep, is_tilting_module, KroneckerError, KroneckerObject, Point, Proj, ProjSum, Summand, TwoTermComplex};

/// The object a recollement is localized at: `P_i`, `Q_i`, or a regular
/// simple (whose Prüfer module spans the localizing subcategory).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    P(usize),
    Q(usize),
    Pruefer(Point),
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Row::P(i) => write!(f, "P{i}"),
            Row::Q(i) => write!(f, "Q{i}"),
            Row::Pruefer(p) => write!(f, "Pruefer({p})"),
        }
    }
}

/// An input summand: a named object or an explicit complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Object(Summand),
    Complex(TwoTermComplex),
}

/// A silting object up to additive equivalence: its distinct indecomposable
/// summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ObjectSum(pub BTreeSet<Summand>);

impl ObjectSum {
    pub fn of(items: impl IntoIterator<Item = Summand>) -> ObjectSum {
        ObjectSum(items.into_iter().collect())
    }

    pub fn modules(items: impl IntoIterator<Item = KroneckerObject>) -> ObjectSum {
        ObjectSum::of(items.into_iter().map(Summand::Module))
    }

    pub fn union(&self, other: &ObjectSum) -> ObjectSum {
        ObjectSum(self.0.union(&other.0).cloned().collect())
    }

    /// The module part, ignoring shifted projectives.
    pub fn module_part(&self) -> Vec<KroneckerObject> {
        self.0
            .iter()
            .filter_map(|s| match s {
                Summand::Module(o) => Some(o.clone()),
                Summand::Shifted(_) => None,
            })
            .collect()
    }
}

impl fmt::Display for ObjectSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn p(i: usize) -> Summand {
    Summand::Module(KroneckerObject::Preprojective(i))
}

fn q(i: usize) -> Summand {
    Summand::Module(KroneckerObject::Preinjective(i))
}

fn shifted(i: usize) -> Summand {
    Summand::Shifted(Proj::from_index(i).expect("projective index"))
}

/// The silting objects of the two outer categories that may be glued along
/// `row`, as `(left, right)`: left lives on the `i_*` side, right on the `j_!` side.
pub fn admissible(row: &Row) -> Result<(Vec<ObjectSum>, Vec<ObjectSum>), KroneckerError> {
    let one = |s: Summand| ObjectSum::of([s]);
    match row {
        Row::P(0) | Row::Q(0) => Err(KroneckerError::ZeroIndex),
        Row::P(1) => Ok((vec![one(q(1))], vec![one(p(1)), one(shifted(1))])),
        Row::P(2) => Ok((vec![one(p(1)), one(shifted(1))], vec![one(p(2)), one(shifted(2))])),
        Row::P(i) => {
            let mut left = vec![one(p(i - 1))];
            if *i == 3 {
                left.push(one(shifted(2)));
            }
            Ok((left, vec![one(p(*i))]))
        }
        Row::Q(i) => Ok((vec![one(q(i + 1))], vec![one(q(*i))])),
        Row::Pruefer(pt) => Ok((Vec::new(), vec![ObjectSum::modules([KroneckerObject::Pruefer(pt.clone())])])),
    }
}

fn term_complex(t: &Term) -> Result<Option<TwoTermComplex>, KroneckerError> {
    match t {
        Term::Complex(c) => Ok(Some(c.clone())),
        Term::Object(Summand::Shifted(p)) => Ok(Some(TwoTermComplex::shifted(ProjSum::repeat(*p, 1)))),
        Term::Object(Summand::Module(o)) if o.is_finite() => Ok(Some(TwoTermComplex::presentation(&explicit_rep(o)?))),
        Term::Object(Summand::Module(_)) => Ok(None),
    }
}

/// Additive normal form of a list of terms.
pub fn normalize(terms: &[Term]) -> Result<ObjectSum, KroneckerError> {
    let mut out = BTreeSet::new();
    for t in terms {
        match t {
            Term::Complex(c) => out.extend(c.summands()?.into_iter().map(|(s, _)| s)),
            Term::Object(s) => {
                out.insert(s.clone());
            }
        }
    }
    Ok(ObjectSum(out))
}

/// Result of a gluing: the glued object, `|I|`, and the new summand `σ̃`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedSilting {
    pub sum: ObjectSum,
    pub universal_count: usize,
    pub cocone: Option<TwoTermComplex>,
}

/// The direct sum of the terms as one two-term complex.
pub fn to_complex(terms: &[Term]) -> Result<TwoTermComplex, KroneckerError> {
    let parts: Vec<TwoTermComplex> = terms.iter().map(term_complex).collect::<Result<Vec<_>, _>>()?.into_iter().flatten().collect();
    Ok(TwoTermComplex::direct_sum(&parts))
}

/// `dim Hom(A, B[shift])` in the derived category; for modules and
/// `shift = 1` this is `Ext¹(A, B)`.
pub fn hom_terms(a: &[Term], b: &[Term], shift: i64) -> Result<usize, KroneckerError> {
    Ok(derived_hom_dim(&to_complex(a)?, &to_complex(b)?, shift))
}

/// Glues `left` (on the `i_*` side) and `right` (on the `j_!` side) along `row`:
/// `σ̃` is the cocone of the left-universal map `σ^(I) → ω[1]`, and the
/// result is `σ̃ ⊕ σ` in additive normal form.
pub fn glue_kronecker(row: &Row, left: &[Term], right: &[Term]) -> Result<GluedSilting, KroneckerError> {
    let (ln, rn) = (normalize(left)?, normalize(right)?);
    if let Some(s) = ln.0.iter().chain(&rn.0).find(|s| matches!(s, Summand::Module(KroneckerObject::Lukas))) {
        return Err(KroneckerError::Inadmissible { row: row.to_string(), detail: format!("{s} only arises from a trivial recollement") });
    }
    let (left_ok, right_ok) = admissible(row)?;
    if let Row::Pruefer(pt) = row {
        return glue_pruefer(row, pt, &ln, &rn, &right_ok);
    }
    if !left_ok.contains(&ln) {
        return Err(KroneckerError::Inadmissible {
            row: row.to_string(),
            detail: format!("{ln} is not silting in the subcategory; expected one of {}", list(&left_ok)),
        });
    }
    if !right_ok.contains(&rn) {
        return Err(KroneckerError::Inadmissible {
            row: row.to_string(),
            detail: format!("{rn} is not silting in the localizing subcategory; expected one of {}", list(&right_ok)),
        });
    }
    let (sigma, omega) = (to_complex(left)?, to_complex(right)?);
    check_pair_hypotheses(&omega, &sigma)?;
    let (power, alpha, count) = universal_map(&sigma, &omega);
    let tilde = cocone(&omega, &power, &alpha);
    let glued = TwoTermComplex::direct_sum(&[tilde.clone(), sigma.clone()]);
    let self_ext = derived_hom_dim(&glued, &glued, 1);
    if self_ext != 0 {
        return Err(KroneckerError::Hypothesis {
            hypothesis: "silting",
            detail: format!("the glued object has Hom(T, T[1]) of dimension {self_ext}"),
        });
    }
    let sum = normalize(&[Term::Complex(tilde.clone()), Term::Complex(sigma)])?;
    Ok(GluedSilting { sum, universal_count: count, cocone: Some(tilde) })
}

fn list(options: &[ObjectSum]) -> String {
    options.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// The large case: `I = 0` because Prüfer modules are Ext-orthogonal and
/// `Ext¹(G, S_∞) = 0`, so the glued object is `left ⊕ S_∞`.
fn glue_pruefer(row: &Row, pt: &Point, ln: &ObjectSum, rn: &ObjectSum, right_ok: &[ObjectSum]) -> Result<GluedSilting, KroneckerError> {
    if !right_ok.contains(rn) {
        return Err(KroneckerError::Inadmissible {
            row: row.to_string(),
            detail: format!("expected Pruefer({pt}) on the right, got {rn}"),
        });
    }
    let symbolic_left = ln.0.iter().all(|s| match s {
        Summand::Module(KroneckerObject::Generic) => true,
        Summand::Module(KroneckerObject::Pruefer(other)) => other != pt,
        _ => false,
    });
    if !symbolic_left || !ln.0.contains(&Summand::Module(KroneckerObject::Generic)) {
        return Err(KroneckerError::Inadmissible {
            row: row.to_string(),
            detail: format!("the left side must be Generic plus Pruefer modules at other points, got {ln}"),
        });
    }
    Ok(GluedSilting { sum: ln.union(rn), universal_count: 0, cocone: None })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    SiltingNonTilting,
    CompactTilting,
    NonCompactTilting,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::SiltingNonTilting => "silting non-tilting",
            ClassKind::CompactTilting => "compact tilting",
            ClassKind::NonCompactTilting => "non-compact tilting",
        })
    }
}

/// One line of the classification of silting modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub kind: ClassKind,
    /// The silting module; `None` for the symbolic families.
    pub module: Option<ObjectSum>,
    /// The two-term silting complex when it is not the module's presentation.
    pub complex: Option<ObjectSum>,
    pub label: String,
    pub symbolic: bool,
    pub gluable: bool,
}

impl fmt::Display for ClassEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.label)?;
        if let Some(c) = &self.complex {
            write!(f, " w.r.t. {c}")?;
        }
        if self.symbolic {
            write!(f, " (symbolic")?;
            if !self.gluable {
                write!(f, ", not gluable")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The classification list, with the two infinite compact families cut at `bound`.
pub fn classify_silting(bound: usize) -> Vec<ClassEntry> {
    let finite = |kind, module: ObjectSum, complex: Option<ObjectSum>| ClassEntry {
        kind,
        label: module.to_string(),
        module: Some(module),
        complex,
        symbolic: false,
        gluable: true,
    };
    let mut out = vec![
        finite(ClassKind::SiltingNonTilting, ObjectSum::default(), Some(ObjectSum::of([shifted(1), shifted(2)]))),
        finite(ClassKind::SiltingNonTilting, ObjectSum::of([p(1)]), Some(ObjectSum::of([p(1), shifted(2)]))),
        finite(ClassKind::SiltingNonTilting, ObjectSum::of([q(1)]), Some(ObjectSum::of([q(1), shifted(1)]))),
    ];
    for i in 2..=bound.max(2) {
        out.push(finite(ClassKind::CompactTilting, ObjectSum::of([p(i), p(i + 1)]), None));
    }
    for i in 1..=bound.max(1) {
        out.push(finite(ClassKind::CompactTilting, ObjectSum::of([q(i + 1), q(i)]), None));
    }
    out.push(finite(ClassKind::CompactTilting, ObjectSum::of([p(1), p(2)]), None));
    out.push(ClassEntry {
        kind: ClassKind::NonCompactTilting,
        module: None,
        complex: None,
        label: "R_U + R_U/R for a nonempty set U of points".into(),
        symbolic: true,
        gluable: true,
    });
    out.push(ClassEntry {
        kind: ClassKind::NonCompactTilting,
        module: Some(ObjectSum::modules([KroneckerObject::Lukas])),
        complex: None,
        label: "Lukas".into(),
        symbolic: true,
        gluable: false,
    });
    out
}

impl ClassEntry {
    /// True when the entry is a finite module that passes the tilting test.
    pub fn check_tilting(&self, bound: usize) -> Option<bool> {
        let m = self.module.as_ref()?;
        if self.symbolic {
            return None;
        }
        is_tilting_module(&m.module_part(), bound).ok()
    }
}
