//! Deterministic machine-readable reports: identical request and seed
//! produce byte-identical output. All scalar payloads are rendered in the
//! exact entry grammar, and every certificate embedded in a report has been
//! re-verified before it is written.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::input::AlgebraInput;
use crate::liealg::{LieAlgebra, SignatureForm};
use crate::matrix::{Matrix, Subspace};
use crate::repcheck::forms::{invariant_forms, FormSymmetry};
use crate::repcheck::meataxe::{
    decide_irreducibility, verify_verdict, IrreducibilityCertificate, IrreducibilityVerdict,
};
use crate::repcheck::typeclass::{classify_type, ConjugationOutcome};
use crate::repcheck::{commutant, Representation};
use crate::scalar::{format_scalar, Scalar};
use crate::symspace::lieball::NegativePlane;
use crate::symspace::stab::{fixer_algebra, local_transitivity, parabolic_algebra};

/// The analysis tasks, in their fixed execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Task {
    Closure,
    Commutant,
    Irreducibility,
    Type,
    Forms,
    Center,
    Fixer,
    Transitivity,
}

impl Task {
    pub const ALL: [Task; 8] = [
        Task::Closure,
        Task::Commutant,
        Task::Irreducibility,
        Task::Type,
        Task::Forms,
        Task::Center,
        Task::Fixer,
        Task::Transitivity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Task::Closure => "CLOSURE",
            Task::Commutant => "COMMUTANT",
            Task::Irreducibility => "IRREDUCIBILITY",
            Task::Type => "TYPE",
            Task::Forms => "FORMS",
            Task::Center => "CENTER",
            Task::Fixer => "FIXER",
            Task::Transitivity => "TRANSITIVITY",
        }
    }

    pub fn parse(name: &str) -> Result<Task> {
        match name.trim().to_ascii_uppercase().as_str() {
            "CLOSURE" => Ok(Task::Closure),
            "COMMUTANT" => Ok(Task::Commutant),
            "IRREDUCIBILITY" => Ok(Task::Irreducibility),
            "TYPE" => Ok(Task::Type),
            "FORMS" => Ok(Task::Forms),
            "CENTER" => Ok(Task::Center),
            "FIXER" => Ok(Task::Fixer),
            "TRANSITIVITY" => Ok(Task::Transitivity),
            other => Err(Error::BadParams(format!("unknown task '{other}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisRequest {
    pub source: String,
    pub input: AlgebraInput,
    pub tasks: Vec<Task>,
    pub seed: u64,
    pub budget: usize,
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| Value::String(format_scalar(m.at(i, j))))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_scalar(x))).collect())
}

fn subspace_to_json(s: &Subspace) -> Value {
    json!({
        "ambient_dim": s.ambient_dim(),
        "dimension": s.dim(),
        "basis": s.basis().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
    })
}

pub fn certificate_to_json(cert: &IrreducibilityCertificate) -> Value {
    match cert {
        IrreducibilityCertificate::Norton(c) => json!({
            "kind": "norton",
            "element": c.element.iter().map(|(coeff, word)| {
                json!({"coeff": format_scalar(coeff), "word": word})
            }).collect::<Vec<_>>(),
            "kernel_vector": vector_to_json(&c.kernel_vector),
            "cokernel_vector": vector_to_json(&c.cokernel_vector),
        }),
        IrreducibilityCertificate::ComplexSplit(cs) => json!({
            "kind": "complex_split",
            "complex_structure": matrix_to_json(&cs.complex_structure),
            "complex_basis": cs.complex_basis.iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
            "inner": certificate_to_json(&IrreducibilityCertificate::Norton(cs.inner.clone())),
            "conjugation": match &cs.conjugation {
                ConjugationOutcome::NotSelfConjugate => json!({"kind": "not_self_conjugate"}),
                ConjugationOutcome::QuaternionicConj { witness } => json!({
                    "kind": "quaternionic",
                    "witness": matrix_to_json(witness),
                }),
                ConjugationOutcome::RealConj { witness } => json!({
                    "kind": "real",
                    "witness": matrix_to_json(witness),
                }),
            },
        }),
    }
}

pub fn verdict_to_json(rep: &Representation, verdict: &IrreducibilityVerdict) -> Value {
    let verified = verify_verdict(rep, verdict);
    match verdict {
        IrreducibilityVerdict::Irreducible(cert) => json!({
            "verdict": "IRREDUCIBLE",
            "certificate": certificate_to_json(cert),
            "verified": verified,
        }),
        IrreducibilityVerdict::Reducible(w) => json!({
            "verdict": "REDUCIBLE",
            "witness": subspace_to_json(&w.subspace),
            "verified": verified,
        }),
    }
}

/// Run the requested tasks in fixed order and assemble the report.
pub fn run_analysis(request: &AnalysisRequest) -> Result<Value> {
    let input = &request.input;
    let mut results = Vec::new();
    let mut tasks = request.tasks.clone();
    tasks.sort();
    tasks.dedup();
    let rep = Representation::new(
        input.name.clone(),
        input.ambient_dim,
        input.generators.clone(),
    )?;
    for task in &tasks {
        let outcome = run_task(*task, request, &rep)?;
        results.push(json!({"task": task.name(), "result": outcome}));
    }
    Ok(json!({
        "tool": "lieball",
        "version": env!("CARGO_PKG_VERSION"),
        "exact_arithmetic": true,
        "request": {
            "source": request.source,
            "tasks": tasks.iter().map(|t| t.name()).collect::<Vec<_>>(),
            "seed": request.seed,
            "budget": request.budget,
        },
        "results": results,
    }))
}

fn closure_of(request: &AnalysisRequest) -> Result<LieAlgebra> {
    let input = &request.input;
    LieAlgebra::bracket_closure(
        input.name.clone(),
        input.generators.clone(),
        input.ambient_dim * input.ambient_dim,
    )
}

fn run_task(task: Task, request: &AnalysisRequest, rep: &Representation) -> Result<Value> {
    let input = &request.input;
    Ok(match task {
        Task::Closure => {
            let alg = closure_of(request)?;
            json!({
                "ambient_dim": alg.ambient_dim(),
                "dimension": alg.dim(),
                "basis": alg.basis().iter().map(matrix_to_json).collect::<Vec<_>>(),
            })
        }
        Task::Commutant => {
            let c = commutant(rep)?;
            json!({
                "dimension": c.dim(),
                "basis": c.basis().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
            })
        }
        Task::Irreducibility => {
            let verdict = decide_irreducibility(rep, request.seed, request.budget)?;
            verdict_to_json(rep, &verdict)
        }
        Task::Type => {
            let v = classify_type(rep, request.seed, request.budget)?;
            json!({
                "type": v.kind.to_string(),
                "commutant_dim": v.commutant_dim,
            })
        }
        Task::Forms => {
            let sym = invariant_forms(rep, FormSymmetry::Symmetric)?;
            let asym = invariant_forms(rep, FormSymmetry::Antisymmetric)?;
            let mut value = json!({
                "symmetric": {
                    "dimension": sym.dim(),
                    "signatures": sym.signatures.iter().map(|s| json!([s.0, s.1, s.2])).collect::<Vec<_>>(),
                    "basis": sym.basis.iter().map(matrix_to_json).collect::<Vec<_>>(),
                },
                "antisymmetric": {
                    "dimension": asym.dim(),
                    "basis": asym.basis.iter().map(matrix_to_json).collect::<Vec<_>>(),
                },
            });
            if input.field.is_gaussian() {
                let herm = invariant_forms(rep, FormSymmetry::Hermitian)?;
                value["hermitian"] = json!({
                    "dimension": herm.dim(),
                    "signatures": herm.signatures.iter().map(|s| json!([s.0, s.1, s.2])).collect::<Vec<_>>(),
                    "basis": herm.basis.iter().map(matrix_to_json).collect::<Vec<_>>(),
                });
            }
            value
        }
        Task::Center => {
            let alg = closure_of(request)?;
            let c = alg.center()?;
            json!({
                "dimension": c.dim(),
                "basis": c.basis().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
            })
        }
        Task::Fixer => {
            if input.ambient_dim < 3 {
                return Err(Error::BadParams("FIXER needs ambient dimension >= 3".into()));
            }
            let signature = input.signature.unwrap_or(SignatureForm::new(2, input.ambient_dim - 2));
            if signature.neg != 2 {
                return Err(Error::BadParams(
                    "FIXER is defined for signature (2, n) ambients".into(),
                ));
            }
            let alg = closure_of(request)?;
            let fixer = fixer_algebra(&alg, &NegativePlane::base(input.ambient_dim - 2))?;
            json!({
                "base_plane": "span{e0, e1}",
                "dimension": fixer.dim(),
                "basis": fixer.basis().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
            })
        }
        Task::Transitivity => {
            let signature = input
                .signature
                .ok_or_else(|| Error::BadParams("TRANSITIVITY needs a declared signature".into()))?;
            if signature.neg < 1 || signature.pos < 1 {
                return Err(Error::BadParams(
                    "TRANSITIVITY needs signature (p,q) with p, q >= 1".into(),
                ));
            }
            let mut v = vec![Scalar::zero(); input.ambient_dim];
            v[0] = Scalar::one();
            v[signature.neg] = Scalar::one();
            let p = parabolic_algebra(signature.neg - 1, signature.pos - 1, &v)?;
            let ambient = crate::builtins::so_pq(signature.neg, signature.pos)?;
            let alg = closure_of(request)?;
            let transitive = local_transitivity(&alg, &p, &ambient)?;
            json!({
                "parabolic_dimension": p.dim(),
                "lightlike_vector": vector_to_json(&v),
                "locally_transitive": transitive,
            })
        }
    })
}

/// Render a report as canonical bytes (sorted keys, stable layout).
pub fn to_canonical_string(report: &Value) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

/// Plain-text rendition for the --human flag.
pub fn to_human_string(report: &Value) -> String {
    let mut out = String::new();
    let push_line = |out: &mut String, s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    push_line(
        &mut out,
        format!(
            "lieball {} (exact arithmetic)",
            report["version"].as_str().unwrap_or("?")
        ),
    );
    push_line(
        &mut out,
        format!(
            "source: {}   seed: {}   budget: {}",
            report["request"]["source"].as_str().unwrap_or("?"),
            report["request"]["seed"],
            report["request"]["budget"]
        ),
    );
    if let Some(results) = report["results"].as_array() {
        for r in results {
            let task = r["task"].as_str().unwrap_or("?");
            push_line(&mut out, format!("-- {task}"));
            let res = &r["result"];
            match task {
                "CLOSURE" => push_line(
                    &mut out,
                    format!(
                        "   dimension {} in ambient {}",
                        res["dimension"], res["ambient_dim"]
                    ),
                ),
                "COMMUTANT" | "CENTER" | "FIXER" => {
                    push_line(&mut out, format!("   dimension {}", res["dimension"]))
                }
                "IRREDUCIBILITY" => push_line(
                    &mut out,
                    format!(
                        "   {} (certificate verified: {})",
                        res["verdict"].as_str().unwrap_or("?"),
                        res["verified"]
                    ),
                ),
                "TYPE" => push_line(
                    &mut out,
                    format!(
                        "   {} with commutant dimension {}",
                        res["type"].as_str().unwrap_or("?"),
                        res["commutant_dim"]
                    ),
                ),
                "FORMS" => push_line(
                    &mut out,
                    format!(
                        "   symmetric dim {}, antisymmetric dim {}, signatures {}",
                        res["symmetric"]["dimension"],
                        res["antisymmetric"]["dimension"],
                        res["symmetric"]["signatures"]
                    ),
                ),
                "TRANSITIVITY" => push_line(
                    &mut out,
                    format!(
                        "   parabolic dim {}, locally transitive: {}",
                        res["parabolic_dimension"], res["locally_transitive"]
                    ),
                ),
                _ => push_line(&mut out, format!("   {res}")),
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_builtin;

    fn builtin_request(name: &str, tasks: Vec<Task>) -> AnalysisRequest {
        let alg = parse_builtin(name).unwrap().build().unwrap();
        AnalysisRequest {
            source: name.to_string(),
            input: AlgebraInput {
                name: alg.name().map(str::to_owned),
                field: alg.field(),
                ambient_dim: alg.ambient_dim(),
                signature: None,
                generators: alg.basis().to_vec(),
            },
            tasks,
            seed: 0,
            budget: 64,
        }
    }

    #[test]
    fn analyze_appendix_so12() {
        let req = builtin_request(
            "appendix_so12",
            vec![Task::Irreducibility, Task::Type, Task::Forms],
        );
        let report = run_analysis(&req).unwrap();
        assert_eq!(report["results"][0]["result"]["verdict"], "IRREDUCIBLE");
        assert_eq!(report["results"][0]["result"]["verified"], true);
        assert_eq!(report["results"][1]["result"]["type"], "REAL");
        assert_eq!(
            report["results"][2]["result"]["symmetric"]["signatures"][0],
            serde_json::json!([2, 3, 0])
        );
    }

    #[test]
    fn analyze_center_of_u12() {
        let req = builtin_request("u_real(1,2)", vec![Task::Center]);
        let report = run_analysis(&req).unwrap();
        assert_eq!(report["results"][0]["result"]["dimension"], 1);
    }

    #[test]
    fn reports_are_byte_identical() {
        let req = builtin_request(
            "so(2,2)",
            vec![Task::Closure, Task::Commutant, Task::Irreducibility],
        );
        let a = to_canonical_string(&run_analysis(&req).unwrap());
        let b = to_canonical_string(&run_analysis(&req).unwrap());
        assert_eq!(a, b);
        assert!(!to_human_string(&run_analysis(&req).unwrap()).is_empty());
    }
}
