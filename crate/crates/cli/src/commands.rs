//! One function per subcommand, each producing a JSON report and a summary.

use std::fmt::Write as _;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use beurling::diagnostics::{self, ArensVerdict, ProductVerdict};
use beurling::fourier::{self, GroupFunctionJson};
use beurling::line::verify_line_weight;
use beurling::report::{self, num};
use beurling::weights::{restrict_finite, restrict_su2_to_torus};
use beurling::{DualTable, GroupFunction, IrrepLabel, Truncation, Weight};
use serde_json::{json, Map, Value};

use crate::inputs::{self, ParamRule, WeightParams};
use crate::WeightArgs;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Clean,
    Flagged,
}

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub verdict: Option<(String, bool)>,
    pub status: Status,
}

impl Outcome {
    fn new(json: Value, text: String) -> Self {
        Outcome { json, text, verdict: None, status: Status::Clean }
    }

    fn with_verdict(mut self, verdict: &str, good: bool, flag_if_bad: bool) -> Self {
        self.verdict = Some((verdict.to_string(), good));
        if !good && flag_if_bad {
            self.status = Status::Flagged;
        }
        self
    }

    pub fn render(&self, color: bool) -> String {
        let mut out = self.text.clone();
        if let Some((v, good)) = &self.verdict {
            let v = match (color, good) {
                (false, _) => v.clone(),
                (true, true) => format!("\x1b[32m{v}\x1b[0m"),
                (true, false) => format!("\x1b[31m{v}\x1b[0m"),
            };
            let _ = writeln!(out, "verdict: {v}");
        }
        out
    }
}

fn load_weight(dual: &DualTable, args: &WeightArgs) -> Result<Weight> {
    inputs::parse_weight(dual, &args.weight, WeightParams { a: args.a, b: args.b }, args.cross)
}

fn values_map(dual: &DualTable, weight: &Weight, labels: &[IrrepLabel]) -> Result<Value> {
    let mut map = Map::new();
    for l in labels {
        map.insert(dual.format_label(l), num(weight.eval(l)?));
    }
    Ok(Value::Object(map))
}

fn fmt(x: f64) -> String {
    let r = report::round_sig(x);
    if r != 0.0 && (r.abs() >= 1e12 || r.abs() < 1e-4) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

pub fn fuse(group: &str, a: &str, b: Option<&str>, power: Option<u32>) -> Result<Outcome> {
    let dual = inputs::parse_group(group)?;
    let la = inputs::parse_label(&dual, a)?;
    let (lhs, v) = match (power, b) {
        (Some(n), _) => (format!("{}^{n}", dual.format_label(&la)), dual.fusion_power(&la, n)?),
        (None, Some(b)) => {
            let lb = inputs::parse_label(&dual, b)?;
            (format!("{} ⊗ {}", dual.format_label(&la), dual.format_label(&lb)), dual.fuse(&la, &lb)?)
        }
        (None, None) => bail!("fuse needs --b or --power"),
    };
    let terms: Vec<String> = v
        .iter()
        .map(|(l, m)| if m == 1 { dual.format_label(l) } else { format!("{m}·{}", dual.format_label(l)) })
        .collect();
    let text = format!("{lhs} = {}\n", terms.join(" + "));
    let json = json!({
        "group": dual.name(),
        "product": report::fusion_json(&dual, &v),
        "dimension": v.total_dim(&dual)?,
    });
    Ok(Outcome::new(json, text))
}

pub fn check_weight(group: &str, args: &WeightArgs, trunc: usize) -> Result<Outcome> {
    let dual = inputs::parse_group(group)?;
    let weight = load_weight(&dual, args)?;
    let truncation = Truncation::first(&dual, trunc)?;
    let r = weight.verify(&truncation)?;
    let mut json = report::violations_json(&dual, &r);
    json["group"] = json!(dual.name());
    json["weight"] = serde_json::to_value(weight.to_descriptor())?;
    let mut text = format!("checked {} pairs over {}\n", r.checked_pairs, r.truncation);
    for v in r.violations.iter().take(20) {
        let _ = writeln!(
            text,
            "  ω({})/(ω({})ω({})) = {}",
            dual.format_label(&v.output),
            dual.format_label(&v.left),
            dual.format_label(&v.right),
            fmt(v.ratio)
        );
    }
    if r.violations.len() > 20 {
        let _ = writeln!(text, "  ... {} more", r.violations.len() - 20);
    }
    let verdict = if r.is_valid() { "valid" } else { "violations found" };
    Ok(Outcome::new(json, text).with_verdict(verdict, r.is_valid(), true))
}

pub fn symmetrize(group: &str, args: &WeightArgs, trunc: usize) -> Result<Outcome> {
    let dual = inputs::parse_group(group)?;
    let weight = load_weight(&dual, args)?;
    let omega = weight.symmetrize();
    let mut text = String::from("label\tω\tΩ\n");
    for l in Truncation::first(&dual, trunc)?.labels() {
        let _ = writeln!(text, "{}\t{}\t{}", dual.format_label(l), fmt(weight.eval(l)?), fmt(omega.eval(l)?));
    }
    Ok(Outcome::new(serde_json::to_value(omega.to_descriptor())?, text))
}

pub fn restrict(
    group: &str,
    args: &WeightArgs,
    subgroup: Option<&str>,
    embedding: Option<&str>,
    max_t: Option<u32>,
    trunc: usize,
) -> Result<Outcome> {
    let dual = inputs::parse_group(group)?;
    let weight = load_weight(&dual, args)?;
    let (restricted, searched) = match (&dual, subgroup) {
        (DualTable::Su2, None | Some("t" | "torus")) => {
            let r = restrict_su2_to_torus(&weight, max_t)?;
            (r.weight, r.truncation)
        }
        (DualTable::Finite(g), Some(sub)) => {
            let h_dual = inputs::parse_group(sub)?;
            let h = h_dual.character_table().ok_or_else(|| anyhow!("subgroup {sub:?} must be a finite table"))?;
            let emb = embedding.ok_or_else(|| anyhow!("finite restriction needs --embedding"))?;
            let emb = emb
                .split(',')
                .map(|c| c.trim().parse::<usize>().map_err(|_| anyhow!("bad class index {c:?} in --embedding")))
                .collect::<Result<Vec<_>>>()?;
            (restrict_finite(&weight, g, h, &emb)?, None)
        }
        _ => bail!("restrict supports su2 → torus and finite groups with --subgroup and --embedding"),
    };
    let h_dual = restricted.dual().clone();
    // truncated restrictions are only tabulated up to the search bound
    let labels: Vec<IrrepLabel> =
        Truncation::first(&h_dual, trunc)?.labels().iter().filter(|l| restricted.eval(l).is_ok()).cloned().collect();
    let mut text = format!(
        "restriction to {} ({})\n",
        h_dual.name(),
        match searched {
            None => "exact".to_string(),
            Some(t) => format!("minimised over 2l ≤ {t}"),
        }
    );
    for l in &labels {
        let _ = writeln!(text, "{}\t{}", h_dual.format_label(l), fmt(restricted.eval(l)?));
    }
    let json = json!({
        "group": dual.name(),
        "subgroup": h_dual.name(),
        "exact": searched.is_none(),
        "searched_max_t": searched,
        "weight": serde_json::to_value(restricted.to_descriptor())?,
        "values": values_map(&h_dual, &restricted, &labels)?,
    });
    Ok(Outcome::new(json, text))
}

pub fn norm(group: &str, args: &WeightArgs, function: Option<&str>, gamma_n: u32) -> Result<Outcome> {
    let model = inputs::parse_model(group)?;
    let dual = model.dual().clone();
    let weight = load_weight(&dual, args)?;
    let f = match function {
        None => GroupFunction::delta_e(&model),
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            let doc: GroupFunctionJson = serde_json::from_str(&text).with_context(|| format!("group function {path}"))?;
            GroupFunction::from_json(&model, &doc).with_context(|| format!("group function {path}"))?
        }
    };
    let hat = fourier::transform(&model, &f)?;
    let a = hat.norm_a(&weight)?;
    let a_delta = hat.norm_a_delta(&weight.symmetrize())?;
    let a_gamma = hat.norm_a_gamma(gamma_n)?;
    let blocks: Vec<Value> = hat
        .to_json()
        .irreps
        .iter()
        .map(|b| {
            let m: Vec<Value> =
                b.matrix.iter().map(|row| row.iter().map(|z| json!([num(z[0]), num(z[1])])).collect()).collect();
            json!({ "dim": b.dim, "matrix": m })
        })
        .collect();
    let json = json!({
        "group": model.name(),
        "weight": serde_json::to_value(weight.to_descriptor())?,
        "norm_a": num(a),
        "norm_a_delta": num(a_delta),
        "norm_a_gamma": { "n": gamma_n, "value": num(a_gamma) },
        "coefficients": { "irreps": blocks },
    });
    let text = format!(
        "{}: A = {}, A_Δ = {}, A_γ^{gamma_n} = {}\n",
        model.name(),
        fmt(a),
        fmt(a_delta),
        fmt(a_gamma)
    );
    Ok(Outcome::new(json, text))
}

pub fn amen_constant(group: &str, args: &WeightArgs, trunc: usize) -> Result<Outcome> {
    let dual = inputs::parse_group(group)?;
    let weight = load_weight(&dual, args)?;
    let class = diagnostics::classify_omega(&weight, &Truncation::first(&dual, trunc)?)?;
    let constant = if dual.is_finite() { Some(diagnostics::amen_constant(&weight)?) } else { None };
    let json = json!({
        "group": dual.name(),
        "weight": serde_json::to_value(weight.to_descriptor())?,
        "constant": constant.map(num),
        "omega": report::classification_json(&class),
    });
    let mut text = match constant {
        Some(c) => format!("{}\n", fmt(c)),
        None => format!("{} is infinite; no finite-group constant\n", dual.name()),
    };
    let exact = if class.is_exact() { "" } else { " (truncation estimate)" };
    let _ = writeln!(text, "Ω: {}{exact}", class.name());
    Ok(Outcome::new(json, text))
}

pub fn product_amen(group: &str, family: &str, rule: &str, max_terms: usize, tol: f64) -> Result<Outcome> {
    let dual = inputs::parse_group(group)?;
    if !dual.is_finite() {
        bail!("product-amen needs a finite factor group, got {}", dual.name());
    }
    let rule = ParamRule::parse(rule)?;
    let param = if family.ends_with("_b") { "b" } else { "a" };
    let mut factors = Vec::new();
    for i in 0..=max_terms {
        let Some(p) = rule.at(i) else { break };
        let desc = inputs::family_descriptor(family, WeightParams::default()).with_param(param, p);
        factors.push(Weight::from_descriptor(&dual, &desc).with_context(|| format!("factor {}", i + 1))?);
    }
    let r = diagnostics::product_amen(factors, tol, max_terms)?;
    let mut json = report::product_json(&r);
    json["group"] = json!(dual.name());
    json["family"] = json!(family);
    let text = format!(
        "{} factors, partial product {}{}\n",
        r.factors.len(),
        fmt(r.estimate),
        r.settled_from.map(|k| format!(", settled from factor {k}")).unwrap_or_default()
    );
    let good = r.verdict == ProductVerdict::Convergent;
    Ok(Outcome::new(json, text).with_verdict(r.verdict.as_str(), good, false))
}

pub fn arens_scan(
    group: &str,
    args: &WeightArgs,
    trunc: usize,
    tail_start: usize,
    threshold: f64,
    slot_label: Option<&str>,
) -> Result<Outcome> {
    let dual = inputs::parse_group(group)?;
    let weight = load_weight(&dual, args)?;
    let r = match slot_label {
        None => diagnostics::arens_scan_canonical(&weight, trunc, tail_start, threshold)?,
        Some(text) => {
            let DualTable::Product(parts) = &dual else {
                bail!("--slot-label needs a product group");
            };
            let per_slot = parts.iter().map(|p| inputs::parse_label(p, text)).collect::<Result<Vec<_>>>()?;
            let labels = diagnostics::slot_labels(&dual, &per_slot)?;
            diagnostics::arens_scan(&weight, &labels, tail_start, threshold, format!("{text} in one slot"))?
        }
    };
    let mut json = report::scan_json(&dual, &r);
    json["group"] = json!(dual.name());
    json["weight"] = serde_json::to_value(weight.to_descriptor())?;
    let mut text = format!("scanned {} × {} over {}\n", r.labels.len(), r.labels.len(), r.truncation);
    let _ = writeln!(text, "label\trow tail sup\tcol tail sup\tlimit");
    for (i, l) in r.labels.iter().enumerate() {
        let lim = r.closed_form_limits.as_ref().map(|c| fmt(c.rows[i])).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            text,
            "{}\t{}\t{}\t{lim}",
            dual.format_label(l),
            fmt(r.row_tail_sup[i]),
            fmt(r.col_tail_sup[i])
        );
    }
    let verdict = r.verdict;
    let good = verdict != ArensVerdict::NotMetOnTruncation;
    Ok(Outcome::new(json, text).with_verdict(verdict.as_str(), good, true))
}

pub fn point_deriv(group: &str, args: &WeightArgs, label: &str, n_max: usize) -> Result<Outcome> {
    let dual = inputs::parse_group(group)?;
    let weight = load_weight(&dual, args)?;
    let l = inputs::parse_label(&dual, label)?;
    let seq = diagnostics::point_deriv_obstruction(&weight, &l, n_max)?;
    let mut json = report::obstruction_json(&dual, &seq);
    json["group"] = json!(dual.name());
    json["weight"] = serde_json::to_value(weight.to_descriptor())?;
    let mut text = String::from("n\tv_n\trunning min\n");
    let mut n = 1;
    while n <= n_max {
        let _ = writeln!(text, "{n}\t{}\t{}", fmt(seq.values[n - 1]), fmt(seq.running_min[n - 1]));
        n *= 10;
    }
    if (n / 10) != n_max {
        let _ = writeln!(text, "{n_max}\t{}\t{}", fmt(seq.values[n_max - 1]), fmt(seq.min()));
    }
    Ok(Outcome::new(json, text))
}

pub fn line_check(weight: &str, a: Option<f64>, grid: &str) -> Result<Outcome> {
    let w = inputs::parse_line_weight(weight, a)?;
    let grid = inputs::parse_grid(grid)?;
    let r = verify_line_weight(&w, &grid);
    let mut json = report::line_violations_json(&r);
    json["weight"] = serde_json::to_value(w.to_descriptor())?;
    let mut text = format!("checked {} pairs on {} grid points\n", r.checked_pairs, grid.len());
    if r.extrapolated > 0 {
        let _ = writeln!(text, "warning: {} sums fell outside the sampled range and used boundary values", r.extrapolated);
    }
    for v in r.violations.iter().take(20) {
        let _ = writeln!(text, "  w({} + {}) / (w({})w({})) = {}", fmt(v.x), fmt(v.y), fmt(v.x), fmt(v.y), fmt(v.ratio));
    }
    let verdict = if r.is_valid() { "valid" } else { "violations found" };
    Ok(Outcome::new(json, text).with_verdict(verdict, r.is_valid(), true))
}

pub fn catalog() -> Outcome {
    let groups = [
        ("s3", "symmetric group on three letters"),
        ("z<n>", "cyclic group of order n"),
        ("su2", "SU(2), irreps by spin l"),
        ("t", "circle group, irreps by integer n"),
        ("AxB", "direct product, e.g. s3xs3 or su2xt"),
        ("file:<path>", "character table JSON"),
    ];
    let models = ["z4", "z6", "s3", "s3xz2", "s3xs3", "z<n> and products"];
    let weights = [
        ("trivial", "1"),
        ("omega_a", "d_π^a"),
        ("sigma_a", "(1 + log d_π)^a"),
        ("rho_b", "e^{d_π^b}, b ≤ 1, su2 and t"),
        ("exp_dim_b", "e^{d_π^b}, any group, validity checked"),
        ("poly_norm_a", "(1 + |n|)^a on t"),
        ("log_norm_a", "(1 + log(1 + |n|))^a on t"),
        ("exp_norm_b", "e^{(1 + |n|)^b} on t"),
        ("table", "explicit values, descriptor file only"),
        ("product", "pointwise product, descriptor file only"),
        ("symmetrized", "ω(π)ω(π̄), descriptor file only"),
        ("cross", "factorwise on a product group; --cross with a family"),
    ];
    let mut text = String::from("groups:\n");
    for (g, d) in groups {
        let _ = writeln!(text, "  {g:<12} {d}");
    }
    let _ = writeln!(text, "matrix models (norm): {}", models.join(", "));
    text.push_str("weights:\n");
    for (w, d) in weights {
        let _ = writeln!(text, "  {w:<12} {d}");
    }
    let _ = writeln!(text, "line weights: tau_a = (1 + |x|)^a, or a sampled JSON file");
    let json = json!({
        "groups": groups.iter().map(|(g, d)| json!({"spec": g, "description": d})).collect::<Vec<_>>(),
        "models": models,
        "weights": weights.iter().map(|(w, d)| json!({"family": w, "formula": d})).collect::<Vec<_>>(),
        "line_weights": ["tau_a"],
    });
    Outcome::new(json, text)
}
