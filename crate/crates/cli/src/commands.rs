use cherednik_core::category_o::{
    classify as classify_all, coherence_check, induced_weight_spectrum, jack_polynomial,
    weight_string, KappaSpec, StandardModule, WeightMultiplicity,
};
use cherednik_core::dunkl::{representation_check, Operator};
use cherednik_core::morphisms::{self, homomorphism_check, MapId};
use cherednik_core::pbw::fuzz::{associativity_fuzz, FuzzReport};
use cherednik_core::pbw::relations::{self, check_in, standard_image, RelationOutcome};
use cherednik_core::pbw::{
    Algebra, AlgebraParams, Flavor, LocalizedAlgebra, RationalAlgebra, TrigAlgebra,
};
use cherednik_core::symgroup::Partition;
use cherednik_core::{Error, Poly, Scalar};
use serde_json::{json, Value};

use crate::output::Output;
use crate::{AlgebraKind, CheckTarget, CliError, Common, MapKind};

type Res<T> = Result<T, CliError>;

fn kappa(c: &Common) -> Res<Scalar> {
    Ok(c.kappa.parse::<Scalar>()?)
}

fn params(c: &Common) -> Res<AlgebraParams> {
    Ok(AlgebraParams::new(c.n, kappa(c)?)?)
}

fn scalar(s: &str) -> Res<Scalar> {
    Ok(s.parse::<Scalar>()?)
}

fn partition(s: &str) -> Res<Partition> {
    Ok(s.parse::<Partition>()?)
}

fn module(c: &Common, lambda: &str) -> Res<StandardModule> {
    Ok(StandardModule::new(params(c)?, partition(lambda)?)?)
}

fn single(key: &'static str, value: String, json: Value) -> Output {
    Output {
        text: value.clone(),
        json,
        header: vec![key],
        rows: vec![vec![value]],
    }
}

fn nf_in<F: Flavor>(alg: &Algebra<F>, expr: &str) -> Res<Output> {
    let e = alg.parse(expr)?;
    let text = e.to_string();
    let rows = e
        .terms()
        .map(|(w, c)| {
            let single = cherednik_core::pbw::Elem::<F>::from_word(w.clone(), Scalar::one());
            vec![c.to_string(), single.to_string()]
        })
        .collect();
    Ok(Output {
        json: json!({
            "algebra": alg.flavor_name(),
            "n": alg.n(),
            "kappa": alg.kappa().to_string(),
            "input": expr,
            "normal_form": text,
            "terms": e.to_json(),
        }),
        text,
        header: vec!["coefficient", "word"],
        rows,
    })
}

pub fn nf(c: &Common, algebra: AlgebraKind, expr: &str) -> Res<Output> {
    let p = params(c)?;
    match algebra {
        AlgebraKind::Rat => nf_in(&RationalAlgebra::new(p), expr),
        AlgebraKind::Locrat => nf_in(&LocalizedAlgebra::new(p), expr),
        AlgebraKind::Trig => nf_in(&TrigAlgebra::new(p), expr),
    }
}

pub fn act(c: &Common, op: &str, poly: &str) -> Res<Output> {
    let p = params(c)?;
    let alg = RationalAlgebra::new(p.clone());
    let operator = Operator::parse(op, &alg)?;
    let f = Poly::parse(poly, c.n)?;
    let g = operator.apply(&p, &f)?.to_string();
    Ok(Output {
        text: g.clone(),
        json: json!({ "n": c.n, "kappa": p.kappa.to_string(), "operator": operator.to_string(), "input": f.to_string(), "result": g }),
        header: vec!["operator", "input", "result"],
        rows: vec![vec![operator.to_string(), f.to_string(), g]],
    })
}

pub fn embed(c: &Common, map: MapKind, a: &str, b: &str, expr: &str) -> Res<Output> {
    let p = params(c)?;
    let image = match map {
        MapKind::Iota => {
            let src = RationalAlgebra::new(p.clone());
            morphisms::iota(&TrigAlgebra::new(p), &src.parse(expr)?).to_string()
        }
        MapKind::Jmath => {
            let src = TrigAlgebra::new(p.clone());
            morphisms::jmath(&LocalizedAlgebra::new(p), &src.parse(expr)?).to_string()
        }
        MapKind::JmathA => {
            let src = TrigAlgebra::new(p.clone());
            morphisms::jmath_a(&LocalizedAlgebra::new(p), &scalar(a)?, &src.parse(expr)?)
                .to_string()
        }
        MapKind::IotaAb => {
            let src = TrigAlgebra::new(p.clone());
            morphisms::iota_ab(
                &RationalAlgebra::new(p),
                &scalar(a)?,
                &scalar(b)?,
                &src.parse(expr)?,
            )?
            .to_string()
        }
        MapKind::Sigma => morphisms::sigma(&TrigAlgebra::new(p).parse(expr)?).to_string(),
        MapKind::SigmaRat => {
            morphisms::sigma_rational(&RationalAlgebra::new(p).parse(expr)?).to_string()
        }
    };
    let name = format!("{map:?}").to_lowercase();
    Ok(single(
        "image",
        image.clone(),
        json!({ "map": name, "n": c.n, "kappa": c.kappa, "input": expr, "image": image }),
    ))
}

fn outcomes_output(label: String, c: &Common, outcomes: Vec<RelationOutcome>) -> Output {
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let mut text: Vec<String> = outcomes
        .iter()
        .map(|o| match &o.counterexample {
            None => format!("{}: ok", o.name),
            Some(ce) => format!("{}: FAIL  {ce}", o.name),
        })
        .collect();
    text.push(format!(
        "{label}: {} relations, {failed} failed",
        outcomes.len()
    ));
    let rows = outcomes
        .iter()
        .map(|o| {
            vec![
                o.name.clone(),
                o.passed.to_string(),
                o.counterexample.clone().unwrap_or_default(),
            ]
        })
        .collect();
    Output {
        text: text.join("\n"),
        json: json!({ "target": label, "n": c.n, "kappa": c.kappa, "valid": failed == 0, "relations": outcomes }),
        header: vec!["relation", "passed", "counterexample"],
        rows,
    }
}

fn check_std<F: Flavor>(
    alg: &Algebra<F>,
    rels: Vec<relations::Relation>,
) -> Res<Vec<RelationOutcome>> {
    let image = standard_image(alg);
    Ok(check_in(alg, &rels, &image)?)
}

pub fn relcheck(c: &Common, target: CheckTarget, a: &str, b: &str, dmax: u32) -> Res<Output> {
    let p = params(c)?;
    let (n, k) = (p.n, p.kappa.clone());
    let (label, outcomes) = match target {
        CheckTarget::Rat => (
            "rat".to_string(),
            check_std(&RationalAlgebra::new(p), relations::rational(n, &k))?,
        ),
        CheckTarget::Locrat => (
            "locrat".to_string(),
            check_std(&LocalizedAlgebra::new(p), relations::localized(n, &k))?,
        ),
        CheckTarget::Trig => (
            "trig".to_string(),
            check_std(&TrigAlgebra::new(p), relations::trigonometric(n, &k))?,
        ),
        CheckTarget::Pi => (
            "pi".to_string(),
            check_std(&TrigAlgebra::new(p), relations::pi_presentation(n, &k))?,
        ),
        CheckTarget::Dunkl => (
            format!("dunkl(dmax={dmax})"),
            representation_check(&p, dmax)?,
        ),
        CheckTarget::Iota
        | CheckTarget::Jmath
        | CheckTarget::JmathA
        | CheckTarget::IotaAb
        | CheckTarget::Sigma => {
            let id = match target {
                CheckTarget::Iota => MapId::Iota,
                CheckTarget::Jmath => MapId::Jmath,
                CheckTarget::JmathA => MapId::JmathA(scalar(a)?),
                CheckTarget::IotaAb => MapId::IotaAb(scalar(a)?, scalar(b)?),
                _ => MapId::Sigma,
            };
            let report = homomorphism_check(&id, &p)?;
            (report.map, report.relations)
        }
    };
    Ok(outcomes_output(label, c, outcomes))
}

pub fn fuzz(
    c: &Common,
    algebra: AlgebraKind,
    count: usize,
    max_deg: u32,
    seed: u64,
) -> Res<Output> {
    let p = params(c)?;
    let report: FuzzReport = match algebra {
        AlgebraKind::Rat => associativity_fuzz(&RationalAlgebra::new(p), count, max_deg, seed),
        AlgebraKind::Locrat => associativity_fuzz(&LocalizedAlgebra::new(p), count, max_deg, seed),
        AlgebraKind::Trig => associativity_fuzz(&TrigAlgebra::new(p), count, max_deg, seed),
    };
    let mut text = format!(
        "{} n={} kappa={}: {} trials, {} failures",
        report.algebra, report.n, report.kappa, report.trials, report.failures
    );
    if let Some([a, b, cc]) = &report.first_counterexample {
        text.push_str(&format!(
            "\nfirst counterexample: a = {a}; b = {b}; c = {cc}"
        ));
    }
    Ok(Output {
        text,
        header: vec!["algebra", "n", "kappa", "trials", "failures"],
        rows: vec![vec![
            report.algebra.to_string(),
            report.n.to_string(),
            report.kappa.clone(),
            report.trials.to_string(),
            report.failures.to_string(),
        ]],
        json: serde_json::to_value(&report).map_err(|e| CliError::Domain(e.to_string()))?,
    })
}

fn spectrum_rows(rows: &mut Vec<Vec<String>>, tag: String, ws: &[WeightMultiplicity]) {
    for w in ws {
        rows.push(vec![
            tag.clone(),
            weight_string(&w.weight),
            w.multiplicity.to_string(),
        ]);
    }
}

fn spectrum_text(ws: &[WeightMultiplicity]) -> String {
    ws.iter()
        .map(|w| format!("{} m={}", weight_string(&w.weight), w.multiplicity))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn weights(c: &Common, lambda: &str, dmax: usize) -> Res<Output> {
    let sm = module(c, lambda)?;
    let mut text = Vec::new();
    let mut rows = Vec::new();
    let mut degrees = Vec::new();
    for d in 0..=dmax {
        let ws = sm.weight_spectrum(d)?;
        text.push(format!("d={d}: {}", spectrum_text(&ws)));
        spectrum_rows(&mut rows, d.to_string(), &ws);
        degrees.push(json!({ "degree": d, "dim": sm.dim(d), "weights": ws }));
    }
    Ok(Output {
        text: text.join("\n"),
        json: json!({ "n": c.n, "kappa": c.kappa, "lambda": sm.lambda(), "degrees": degrees }),
        header: vec!["degree", "weight", "multiplicity"],
        rows,
    })
}

/// Scales `v` so its first nonzero coordinate is 1.
fn normalized(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => {
            let inv = lead.recip();
            v.iter().map(|c| c * &inv).collect()
        }
        None => v.to_vec(),
    }
}

pub fn singular(c: &Common, lambda: &str, dmax: usize) -> Res<Output> {
    let sm = module(c, lambda)?;
    let mut text = Vec::new();
    let mut rows = Vec::new();
    let mut degrees = Vec::new();
    for d in 1..=dmax {
        let vs: Vec<String> = sm
            .singular_vectors(d)?
            .iter()
            .map(|v| sm.format_vector(d, &normalized(v)))
            .collect();
        for v in &vs {
            text.push(format!("d={d}: {v}"));
            rows.push(vec![d.to_string(), v.clone()]);
        }
        degrees.push(json!({ "degree": d, "vectors": vs }));
    }
    if text.is_empty() {
        text.push(format!("no singular vectors in degrees 1..={dmax}"));
    }
    Ok(Output {
        text: text.join("\n"),
        json: json!({ "n": c.n, "kappa": c.kappa, "lambda": sm.lambda(), "degrees": degrees }),
        header: vec!["degree", "vector"],
        rows,
    })
}

pub fn simple_dims(c: &Common, lambda: &str, dmax: usize) -> Res<Output> {
    let sm = module(c, lambda)?;
    let dims = sm.simple_quotient_dims(dmax)?;
    let std_dims: Vec<usize> = (0..=dmax).map(|d| sm.dim(d)).collect();
    let text = (0..=dmax)
        .map(|d| format!("d={d}: L {} / Delta {}", dims[d], std_dims[d]))
        .collect::<Vec<_>>()
        .join("\n");
    let rows = (0..=dmax)
        .map(|d| vec![d.to_string(), dims[d].to_string(), std_dims[d].to_string()])
        .collect();
    Ok(Output {
        text,
        json: json!({ "n": c.n, "kappa": c.kappa, "lambda": sm.lambda(), "simple": dims, "standard": std_dims }),
        header: vec!["degree", "simple", "standard"],
        rows,
    })
}

pub fn jack(c: &Common, mu: &str) -> Res<Output> {
    let p = params(c)?;
    let parts = cherednik_core::text::parse_int_list(mu)?;
    if parts.len() != c.n || parts.iter().any(|&m| m < 0) {
        return Err(
            Error::Parse(format!("expected {} nonnegative exponents, got {mu}", c.n)).into(),
        );
    }
    let mu: Vec<u32> = parts.iter().map(|&m| m as u32).collect();
    let j = jack_polynomial(&p, &mu)?;
    let poly = j.to_ordered_string();
    let weight = weight_string(&j.weight);
    Ok(Output {
        text: format!("{poly}\nweight {weight}"),
        json: json!({ "n": c.n, "kappa": c.kappa, "mu": j.mu, "poly": poly, "weight": j.weight }),
        header: vec!["mu", "poly", "weight"],
        rows: vec![vec![mu_string(&mu), poly, weight]],
    })
}

fn mu_string(mu: &[u32]) -> String {
    let parts: Vec<String> = mu.iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn classify(c: &Common, check_dmax: Option<usize>) -> Res<Output> {
    let spec = c.kappa.parse::<KappaSpec>()?;
    let entries = classify_all(c.n, &spec)?;
    let coherence = match (&spec, check_dmax) {
        (KappaSpec::Rational(k), Some(dmax)) => Some(coherence_check(c.n, k, dmax)?),
        (KappaSpec::Irrational, Some(_)) => {
            return Err(CliError::Domain(
                "the coherence check needs a rational kappa".into(),
            ));
        }
        _ => None,
    };
    let mut text = Vec::new();
    let mut rows = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let verdict = if e.in_oss { "in" } else { "out" };
        let witness = e
            .witness
            .map(|w| w.to_string())
            .unwrap_or_else(|| "-".into());
        let mut line = format!("{}: {verdict} (witness {witness})", e.lambda);
        let mut row = vec![e.lambda.to_string(), verdict.to_string(), witness];
        if let Some(rows) = &coherence {
            let r = &rows[i];
            let check = match r.first_failure {
                None => format!("semisimple through degree {}", r.degrees_tested - 1),
                Some(d) => format!("not semisimple in degree {d}"),
            };
            let agree = if r.consistent() {
                "consistent"
            } else {
                "INCONSISTENT"
            };
            line.push_str(&format!("; {check}, {agree}"));
            row.push(r.first_failure.map(|d| d.to_string()).unwrap_or_default());
            row.push(r.consistent().to_string());
        }
        text.push(line);
        rows.push(row);
    }
    let mut header = vec!["lambda", "verdict", "witness"];
    if coherence.is_some() {
        header.extend(["first_failure", "consistent"]);
    }
    Ok(Output {
        text: text.join("\n"),
        json: json!({ "n": c.n, "kappa": spec.to_string(), "entries": entries, "coherence": coherence }),
        header,
        rows,
    })
}

pub fn induce(c: &Common, lambda: &str, dmax: usize, kmin: i64, kmax: i64) -> Res<Output> {
    let sm = module(c, lambda)?;
    let data = induced_weight_spectrum(&sm, dmax, kmin, kmax)?;
    let mut text = Vec::new();
    let mut rows = Vec::new();
    for s in &data.slices {
        text.push(format!("k={}: {}", s.k, spectrum_text(&s.weights)));
        spectrum_rows(&mut rows, s.k.to_string(), &s.weights);
    }
    text.push(format!(
        "shift-closed: {}; n-fold shift adds kappa: {}",
        data.is_shift_closed(),
        data.n_fold_shift_adds_kappa()
    ));
    Ok(Output {
        text: text.join("\n"),
        json: serde_json::to_value(&data).map_err(|e| CliError::Domain(e.to_string()))?,
        header: vec!["k", "weight", "multiplicity"],
        rows,
    })
}
