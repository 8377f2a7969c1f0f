//! The combined bijection report and its JSON form.

use serde_json::{json, Value};

use super::coxeter::{cartan_matrix, coxeter_matrix, coxeter_permutation, OrderingChoice};
use super::verify::exact_permanent;
use super::AnalysisError;
use crate::homalg::{HomologicalProfile, IncidenceHomology};
use crate::linalg::{bruhat, has_pu_form, Matrix, Permutation, Rational};
use crate::poset::{format, lattice_structure, rowmotion_map, Poset};

/// Every permutation attached to a poset, with their coincidences under the
/// chosen ordering. Permutations act on element indices.
#[derive(Debug, Clone)]
pub struct BijectionReport {
    pub ordering: Vec<usize>,
    pub grade_perm: Option<Permutation>,
    pub grade_perm_corollary: Option<Permutation>,
    /// λ profile when the Coxeter matrix is in PU form.
    pub coxeter_perm: Option<Permutation>,
    pub bruhat_perm: Permutation,
    pub rowmotion_perm: Option<Permutation>,
    pub u1_is_identity: bool,
    pub u2_diag: Vec<Rational>,
    pub permanent: Option<Rational>,
    pub cartan: Matrix,
    pub coxeter: Matrix,
    pub profile: HomologicalProfile,
    pub lattice: bool,
    pub distributive: Option<bool>,
}

impl BijectionReport {
    pub fn new(
        h: &IncidenceHomology,
        choice: &OrderingChoice,
        max_permanent_n: usize,
    ) -> Result<BijectionReport, AnalysisError> {
        let p = h.poset();
        let ordering = choice.resolve(p, Some(h))?;
        let cartan = cartan_matrix(p, &ordering);
        let coxeter = coxeter_matrix(p, &ordering);
        let f = bruhat(&coxeter)?;
        let bruhat_perm = coxeter_permutation(p, &ordering);
        let lattice = lattice_structure(p).ok();
        let distributive = lattice.as_ref().map(|l| l.is_distributive());
        let rowmotion_perm = match &lattice {
            Some(l) if l.is_distributive() => {
                Some(Permutation::new(rowmotion_map(l)?).expect("rowmotion is a bijection"))
            }
            _ => None,
        };
        let permanent = if p.len() <= max_permanent_n {
            Some(exact_permanent(&coxeter)?)
        } else {
            None
        };
        Ok(BijectionReport {
            grade_perm: h.grade_permutation_ar().ok(),
            grade_perm_corollary: h.grade_permutation_corollary().ok(),
            coxeter_perm: has_pu_form(&coxeter).then(|| bruhat_perm.clone()),
            bruhat_perm,
            rowmotion_perm,
            u1_is_identity: f.u1.is_identity(),
            u2_diag: f.u2.diagonal(),
            permanent,
            cartan,
            coxeter,
            profile: h.profile()?,
            lattice: lattice.is_some(),
            distributive,
            ordering,
        })
    }

    pub fn grade_routes_agree(&self) -> Option<bool> {
        Some(self.grade_perm.as_ref()? == self.grade_perm_corollary.as_ref()?)
    }

    /// `λ(φ̂(x)) = x` for every element, under this report's ordering.
    pub fn coxeter_inverts_grade(&self) -> Option<bool> {
        let lambda = self.coxeter_perm.as_ref()?;
        let g = self.grade_perm.as_ref()?;
        Some(lambda.compose(g).is_identity())
    }

    /// `λ(row(x)) = x` for every element, under this report's ordering.
    pub fn coxeter_inverts_rowmotion(&self) -> Option<bool> {
        let row = self.rowmotion_perm.as_ref()?;
        Some(self.coxeter_perm.as_ref().is_some_and(|l| l.compose(row).is_identity()))
    }

    pub fn grade_is_rowmotion(&self) -> Option<bool> {
        let row = self.rowmotion_perm.as_ref()?;
        Some(self.grade_perm.as_ref() == Some(row))
    }
}

fn int_rows(m: &Matrix) -> Value {
    json!(m.to_int_rows().expect("integer matrix"))
}

/// Images of a permutation listed along `ord`, as labels.
fn perm_labels(p: &Poset, ord: &[usize], sigma: Option<&Permutation>) -> Value {
    match sigma {
        Some(s) => json!(ord.iter().map(|&x| p.label(s.apply(x))).collect::<Vec<_>>()),
        None => Value::Null,
    }
}

/// The report in the stable JSON schema. Key order is alphabetical.
pub fn report_json(p: &Poset, r: &BijectionReport) -> Value {
    let bruhat_p = super::coxeter::elements_to_positions(&r.ordering, &r.bruhat_perm);
    json!({
        "poset": format::to_json_value(p),
        "ordering": r.ordering.iter().map(|&x| p.label(x)).collect::<Vec<_>>(),
        "cartan": int_rows(&r.cartan),
        "coxeter": int_rows(&r.coxeter),
        "bruhat": {
            "p": bruhat_p.one_based(),
            "u2_diag": r.u2_diag.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "u1_is_identity": r.u1_is_identity,
        },
        "permanent": r.permanent.as_ref().map(|v| v.to_string()),
        "profile": serde_json::to_value(&r.profile).expect("serialisable"),
        "verdicts": {
            "lattice": r.lattice,
            "distributive": r.distributive,
            "auslander_gorenstein": r.profile.is_auslander_gorenstein,
            "diagonal": r.profile.is_diagonal,
        },
        "permutations": {
            "grade_ar": perm_labels(p, &r.ordering, r.grade_perm.as_ref()),
            "grade_corollary": perm_labels(p, &r.ordering, r.grade_perm_corollary.as_ref()),
            "coxeter": perm_labels(p, &r.ordering, r.coxeter_perm.as_ref()),
            "rowmotion": perm_labels(p, &r.ordering, r.rowmotion_perm.as_ref()),
        },
        "coincidences": {
            "grade_routes_agree": r.grade_routes_agree(),
            "coxeter_inverts_grade": r.coxeter_inverts_grade(),
            "coxeter_inverts_rowmotion": r.coxeter_inverts_rowmotion(),
            "grade_is_rowmotion": r.grade_is_rowmotion(),
        },
    })
}
