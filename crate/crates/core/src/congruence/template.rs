//! Data-driven congruence templates.
//!
//! A template is a small expression tree over family values, c-values, and
//! index arithmetic in the sweep variables p and n, together with index
//! constraints, prime filters, and the modulus exponent e.  A cell (p, n)
//! passes when v_p(lhs - rhs) >= e.  Constraint and filter violations,
//! undefined indices, and non-p-integral ingredients are skips, so a red
//! report always means a genuine counterexample to the congruence shape.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::families::{bernoulli_table, c_sequence, gbh_table, hurwitz_table, CurveSpec, Family};
use crate::primes::primes_up_to;
use crate::rational::padic_valuation;
use crate::{Error, Rat, Result};

use super::{Report, SweepCell};

/// Largest family or c index a sweep is willing to materialize.
const INDEX_CAP: i64 = 1024;

/// Integer expression in the sweep variables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum IdxExpr {
    Var { name: String },
    Const { value: i64 },
    Add { lhs: Box<IdxExpr>, rhs: Box<IdxExpr> },
    Sub { lhs: Box<IdxExpr>, rhs: Box<IdxExpr> },
    Mul { lhs: Box<IdxExpr>, rhs: Box<IdxExpr> },
}

impl IdxExpr {
    fn eval(&self, p: u64, n: u64) -> i64 {
        match self {
            IdxExpr::Var { name } => {
                if name == "p" {
                    p as i64
                } else {
                    n as i64
                }
            }
            IdxExpr::Const { value } => *value,
            IdxExpr::Add { lhs, rhs } => lhs.eval(p, n).saturating_add(rhs.eval(p, n)),
            IdxExpr::Sub { lhs, rhs } => lhs.eval(p, n).saturating_sub(rhs.eval(p, n)),
            IdxExpr::Mul { lhs, rhs } => lhs.eval(p, n).saturating_mul(rhs.eval(p, n)),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            IdxExpr::Var { name } => {
                if name == "p" || name == "n" {
                    Ok(())
                } else {
                    Err(Error::Template(format!(
                        "unknown index variable {:?} (expected \"p\" or \"n\")",
                        name
                    )))
                }
            }
            IdxExpr::Const { .. } => Ok(()),
            IdxExpr::Add { lhs, rhs } | IdxExpr::Sub { lhs, rhs } | IdxExpr::Mul { lhs, rhs } => {
                lhs.validate()?;
                rhs.validate()
            }
        }
    }
}

/// Rational expression evaluated per cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Expr {
    /// Value of the template's family at an index.
    Family { index: IdxExpr },
    /// Value of the c-sequence backing the family at an index.
    C { index: IdxExpr },
    /// An index expression promoted to a rational.
    Index { value: IdxExpr },
    /// A literal in canonical "num/den" text.
    Rat { value: String },
    Add { lhs: Box<Expr>, rhs: Box<Expr> },
    Sub { lhs: Box<Expr>, rhs: Box<Expr> },
    Mul { lhs: Box<Expr>, rhs: Box<Expr> },
    Div { lhs: Box<Expr>, rhs: Box<Expr> },
}

impl Expr {
    fn validate(&self) -> Result<()> {
        match self {
            Expr::Family { index } | Expr::C { index } | Expr::Index { value: index } => {
                index.validate()
            }
            Expr::Rat { value } => value
                .parse::<Rat>()
                .map(|_| ())
                .map_err(|e| Error::Template(format!("bad rational literal: {}", e))),
            Expr::Add { lhs, rhs }
            | Expr::Sub { lhs, rhs }
            | Expr::Mul { lhs, rhs }
            | Expr::Div { lhs, rhs } => {
                lhs.validate()?;
                rhs.validate()
            }
        }
    }
}

enum Leaf<'a> {
    Family(&'a IdxExpr),
    C(&'a IdxExpr),
}

fn collect_leaves<'a>(e: &'a Expr, out: &mut Vec<Leaf<'a>>) {
    match e {
        Expr::Family { index } => out.push(Leaf::Family(index)),
        Expr::C { index } => out.push(Leaf::C(index)),
        Expr::Index { .. } | Expr::Rat { .. } => {}
        Expr::Add { lhs, rhs }
        | Expr::Sub { lhs, rhs }
        | Expr::Mul { lhs, rhs }
        | Expr::Div { lhs, rhs } => {
            collect_leaves(lhs, out);
            collect_leaves(rhs, out);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum IndexConstraint {
    Even { value: IdxExpr },
    Odd { value: IdxExpr },
    Divides { divisor: IdxExpr, value: IdxExpr },
    NotDivides { divisor: IdxExpr, value: IdxExpr },
    Congruent { lhs: IdxExpr, rhs: IdxExpr, modulus: IdxExpr },
}

impl IndexConstraint {
    fn validate(&self) -> Result<()> {
        match self {
            IndexConstraint::Even { value } | IndexConstraint::Odd { value } => value.validate(),
            IndexConstraint::Divides { divisor, value }
            | IndexConstraint::NotDivides { divisor, value } => {
                divisor.validate()?;
                value.validate()
            }
            IndexConstraint::Congruent { lhs, rhs, modulus } => {
                lhs.validate()?;
                rhs.validate()?;
                modulus.validate()
            }
        }
    }

    /// Ok when satisfied; the skip reason otherwise.
    fn check(&self, p: u64, n: u64) -> std::result::Result<(), String> {
        match self {
            IndexConstraint::Even { value } => {
                let v = value.eval(p, n);
                if v % 2 == 0 {
                    Ok(())
                } else {
                    Err(format!("{} is not even", v))
                }
            }
            IndexConstraint::Odd { value } => {
                let v = value.eval(p, n);
                if v.rem_euclid(2) == 1 {
                    Ok(())
                } else {
                    Err(format!("{} is not odd", v))
                }
            }
            IndexConstraint::Divides { divisor, value } => {
                let d = divisor.eval(p, n);
                let v = value.eval(p, n);
                if d == 0 {
                    Err("zero divisor in constraint".into())
                } else if v % d == 0 {
                    Ok(())
                } else {
                    Err(format!("{} does not divide {}", d, v))
                }
            }
            IndexConstraint::NotDivides { divisor, value } => {
                let d = divisor.eval(p, n);
                let v = value.eval(p, n);
                if d == 0 {
                    Err("zero divisor in constraint".into())
                } else if v % d != 0 {
                    Ok(())
                } else {
                    Err(format!("{} divides {}", d, v))
                }
            }
            IndexConstraint::Congruent { lhs, rhs, modulus } => {
                let m = modulus.eval(p, n);
                if m == 0 {
                    return Err("zero modulus in constraint".into());
                }
                let l = lhs.eval(p, n);
                let r = rhs.eval(p, n);
                if l.rem_euclid(m) == r.rem_euclid(m) {
                    Ok(())
                } else {
                    Err(format!("{} != {} mod {}", l, r, m))
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum PrimeFilter {
    /// Keep primes >= value.
    Min { value: u64 },
    /// Keep primes with p = residue mod modulus.
    Congruent { modulus: u64, residue: u64 },
    /// Skip cells where the c-value at the index is not p-integral.
    CIntegral { index: IdxExpr },
}

impl PrimeFilter {
    fn validate(&self) -> Result<()> {
        match self {
            PrimeFilter::Min { .. } => Ok(()),
            PrimeFilter::Congruent { modulus, residue } => {
                if *modulus < 1 {
                    Err(Error::Template("prime filter modulus must be >= 1".into()))
                } else if residue >= modulus {
                    Err(Error::Template(format!(
                        "prime filter residue {} must be < modulus {}",
                        residue, modulus
                    )))
                } else {
                    Ok(())
                }
            }
            PrimeFilter::CIntegral { index } => index.validate(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CongruenceTemplate {
    pub id: String,
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<(u32, u32)>,
    pub modulus_exponent: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub prime_filters: Vec<PrimeFilter>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub index_constraints: Vec<IndexConstraint>,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl CongruenceTemplate {
    pub fn from_json(s: &str) -> Result<Self> {
        let t: CongruenceTemplate =
            serde_json::from_str(s).map_err(|e| Error::Template(e.to_string()))?;
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if self.id.is_empty() {
            return Err(Error::Template("template id must not be empty".into()));
        }
        let family: Family = self
            .family
            .parse()
            .map_err(|_| Error::Template(format!("unknown family {:?}", self.family)))?;
        if family == Family::Universal {
            return Err(Error::Template(
                "templates check rational congruences; the universal family is polynomial".into(),
            ));
        }
        match (family, self.curve) {
            (Family::Gbh, None) => {
                return Err(Error::Template("gbh templates need a curve".into()))
            }
            (Family::Gbh, Some((a, b))) => {
                CurveSpec::new(a, b).map_err(|e| Error::Template(e.to_string()))?;
            }
            (_, Some(_)) => {
                return Err(Error::Template(format!(
                    "family {} does not take a curve",
                    family
                )))
            }
            _ => {}
        }
        if self.modulus_exponent < 1 {
            return Err(Error::Template("modulus exponent must be >= 1".into()));
        }
        for f in &self.prime_filters {
            f.validate()?;
        }
        for c in &self.index_constraints {
            c.validate()?;
        }
        self.lhs.validate()?;
        self.rhs.validate()
    }

    fn family_enum(&self) -> Family {
        self.family.parse().expect("validated")
    }

    fn curve_spec(&self) -> Option<CurveSpec> {
        self.curve.map(|(a, b)| CurveSpec::new(a, b).expect("validated"))
    }
}

enum FamilyTable {
    Dense(Vec<Rat>),
    Sparse(std::collections::BTreeMap<u64, Rat>),
}

impl FamilyTable {
    fn value(&self, idx: i64) -> Option<&Rat> {
        if idx < 0 {
            return None;
        }
        match self {
            FamilyTable::Dense(v) => v.get(idx as usize),
            FamilyTable::Sparse(t) => t.get(&(idx as u64)),
        }
    }
}

/// Cheap per-cell prechecks: the gbh p = 2 exclusion, then integer-only
/// prime filters, then index constraints.
fn precheck(
    template: &CongruenceTemplate,
    family: Family,
    p: u64,
    n: u64,
) -> std::result::Result<(), String> {
    if family == Family::Gbh && p == 2 {
        return Err("p = 2 is excluded for gbh templates".into());
    }
    for f in &template.prime_filters {
        match f {
            PrimeFilter::Min { value } => {
                if p < *value {
                    return Err(format!("p < {}", value));
                }
            }
            PrimeFilter::Congruent { modulus, residue } => {
                if p % modulus != *residue {
                    return Err(format!("p != {} mod {}", residue, modulus));
                }
            }
            PrimeFilter::CIntegral { .. } => {}
        }
    }
    for c in &template.index_constraints {
        c.check(p, n)?;
    }
    Ok(())
}

fn c_at(c_vals: &[Rat], idx: i64) -> std::result::Result<&Rat, String> {
    if idx < 0 {
        return Err(format!("c index {} is negative", idx));
    }
    c_vals
        .get(idx as usize)
        .ok_or_else(|| format!("c index {} out of range", idx))
}

fn eval_expr(
    e: &Expr,
    table: &FamilyTable,
    c_vals: &[Rat],
    p: u64,
    n: u64,
) -> std::result::Result<Rat, String> {
    match e {
        Expr::Family { index } => {
            let i = index.eval(p, n);
            let v = table
                .value(i)
                .ok_or_else(|| format!("family value undefined at index {}", i))?;
            let val = padic_valuation(v, p).expect("p comes from the sieve");
            if !val.is_nonnegative() {
                return Err(format!("family value at index {} is not {}-integral", i, p));
            }
            Ok(v.clone())
        }
        Expr::C { index } => {
            let i = index.eval(p, n);
            let v = c_at(c_vals, i)?;
            let val = padic_valuation(v, p).expect("p comes from the sieve");
            if !val.is_nonnegative() {
                return Err(format!("c_{} is not {}-integral", i, p));
            }
            Ok(v.clone())
        }
        Expr::Index { value } => Ok(Rat::from(value.eval(p, n))),
        Expr::Rat { value } => value.parse().map_err(|_| "bad literal".to_string()),
        Expr::Add { lhs, rhs } => {
            Ok(eval_expr(lhs, table, c_vals, p, n)? + eval_expr(rhs, table, c_vals, p, n)?)
        }
        Expr::Sub { lhs, rhs } => {
            Ok(eval_expr(lhs, table, c_vals, p, n)? - eval_expr(rhs, table, c_vals, p, n)?)
        }
        Expr::Mul { lhs, rhs } => {
            Ok(eval_expr(lhs, table, c_vals, p, n)? * eval_expr(rhs, table, c_vals, p, n)?)
        }
        Expr::Div { lhs, rhs } => {
            let denom = eval_expr(rhs, table, c_vals, p, n)?;
            if denom.is_zero() {
                return Err("division by zero".into());
            }
            Ok(eval_expr(lhs, table, c_vals, p, n)? / denom)
        }
    }
}

fn evaluate_cell(
    template: &CongruenceTemplate,
    family: Family,
    table: &FamilyTable,
    c_vals: &[Rat],
    p: u64,
    n: u64,
) -> SweepCell {
    let params = [("n", n), ("p", p)];
    if let Err(reason) = precheck(template, family, p, n) {
        return SweepCell::skip(params, reason);
    }
    for f in &template.prime_filters {
        if let PrimeFilter::CIntegral { index } = f {
            let i = index.eval(p, n);
            let c = match c_at(c_vals, i) {
                Ok(c) => c,
                Err(reason) => return SweepCell::skip(params, reason),
            };
            let val = padic_valuation(c, p).expect("p comes from the sieve");
            if !val.is_nonnegative() {
                return SweepCell::skip(params, format!("c_{} is not {}-integral", i, p));
            }
        }
    }
    let lhs = match eval_expr(&template.lhs, table, c_vals, p, n) {
        Ok(v) => v,
        Err(reason) => return SweepCell::skip(params, reason),
    };
    let rhs = match eval_expr(&template.rhs, table, c_vals, p, n) {
        Ok(v) => v,
        Err(reason) => return SweepCell::skip(params, reason),
    };
    let witness = lhs - rhs;
    let v = padic_valuation(&witness, p).expect("p comes from the sieve");
    if v.at_least(template.modulus_exponent as i64) {
        SweepCell::pass(params, witness.to_string())
    } else {
        SweepCell::fail(
            params,
            witness.to_string(),
            format!("valuation {} < {}", v, template.modulus_exponent),
        )
    }
}

/// Evaluates the template on every (prime p <= p_max, 1 <= n <= n_max)
/// cell.  Family and c tables are built once, sized by a dry pass over the
/// live cells, then the cells are evaluated in parallel; the report order
/// is p-major and deterministic.
pub fn template_sweep(
    template: &CongruenceTemplate,
    p_max: u64,
    n_max: u64,
) -> Result<Report> {
    template.validate()?;
    let family = template.family_enum();
    let curve = template.curve_spec();

    let mut cells_params = Vec::new();
    for p in primes_up_to(p_max).iter() {
        for n in 1..=n_max {
            cells_params.push((p, n));
        }
    }

    let mut leaves = Vec::new();
    collect_leaves(&template.lhs, &mut leaves);
    collect_leaves(&template.rhs, &mut leaves);
    for f in &template.prime_filters {
        if let PrimeFilter::CIntegral { index } = f {
            leaves.push(Leaf::C(index));
        }
    }
    let mut max_family: i64 = 0;
    let mut max_c: i64 = 0;
    for &(p, n) in &cells_params {
        if precheck(template, family, p, n).is_err() {
            continue;
        }
        for leaf in &leaves {
            match leaf {
                Leaf::Family(e) => max_family = max_family.max(e.eval(p, n)),
                Leaf::C(e) => max_c = max_c.max(e.eval(p, n)),
            }
        }
    }
    if max_family > INDEX_CAP || max_c > INDEX_CAP {
        return Err(Error::Template(format!(
            "sweep would materialize indices up to {} (cap {})",
            max_family.max(max_c),
            INDEX_CAP
        )));
    }

    let table = match family {
        Family::Bernoulli => FamilyTable::Dense(bernoulli_table(max_family as u64)),
        Family::Hurwitz => FamilyTable::Sparse(hurwitz_table(max_family as u64)),
        Family::Gbh => FamilyTable::Dense(gbh_table(&curve.unwrap(), max_family as u64)),
        Family::Universal => unreachable!("rejected at validation"),
    };
    let c_vals: Vec<Rat> = match family {
        Family::Gbh => c_sequence(&curve.unwrap(), max_c as usize),
        Family::Hurwitz => c_sequence(&CurveSpec::lemniscatic(), max_c as usize),
        _ => (0..=max_c)
            .map(|i| if i % 2 == 0 { Rat::one() } else { -Rat::one() })
            .collect(),
    };

    let cells: Vec<SweepCell> = cells_params
        .par_iter()
        .map(|&(p, n)| evaluate_cell(template, family, &table, &c_vals, p, n))
        .collect();
    Ok(Report::new(template.id.clone(), cells))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::Verdict;

    fn idx_var(name: &str) -> IdxExpr {
        IdxExpr::Var { name: name.into() }
    }

    fn shifted_n() -> IdxExpr {
        // n + p - 1
        IdxExpr::Add {
            lhs: Box::new(idx_var("n")),
            rhs: Box::new(IdxExpr::Sub {
                lhs: Box::new(idx_var("p")),
                rhs: Box::new(IdxExpr::Const { value: 1 }),
            }),
        }
    }

    fn family_over_index(index: IdxExpr) -> Expr {
        Expr::Div {
            lhs: Box::new(Expr::Family { index: index.clone() }),
            rhs: Box::new(Expr::Index { value: index }),
        }
    }

    fn kummer_template() -> CongruenceTemplate {
        CongruenceTemplate {
            id: "kummer-classical".into(),
            family: "bernoulli".into(),
            curve: None,
            modulus_exponent: 1,
            prime_filters: vec![PrimeFilter::Min { value: 5 }],
            index_constraints: vec![
                IndexConstraint::Even { value: idx_var("n") },
                IndexConstraint::NotDivides {
                    divisor: IdxExpr::Sub {
                        lhs: Box::new(idx_var("p")),
                        rhs: Box::new(IdxExpr::Const { value: 1 }),
                    },
                    value: idx_var("n"),
                },
            ],
            lhs: family_over_index(idx_var("n")),
            rhs: family_over_index(shifted_n()),
        }
    }

    #[test]
    fn kummer_template_matches_the_dedicated_checker() {
        let report = template_sweep(&kummer_template(), 13, 30).unwrap();
        assert!(report.summary.pass > 0);
        assert_eq!(report.summary.fail, 0);
        for cell in &report.cells {
            let p: u64 = cell.params["p"].parse().unwrap();
            let n: u64 = cell.params["n"].parse().unwrap();
            if p < 5 || n % 2 != 0 {
                assert_eq!(cell.verdict, Verdict::Skip);
                continue;
            }
            let dedicated = crate::congruence::kummer_classical(p, n, n + p - 1).unwrap();
            assert_eq!(
                cell.verdict,
                dedicated.verdict(),
                "template and checker disagree at p = {}, n = {}",
                p,
                n
            );
            if cell.verdict == Verdict::Pass {
                assert_eq!(cell.witness, dedicated.cell.witness);
            }
        }
    }

    #[test]
    fn trivial_template_with_a_prime_class_filter() {
        let t = CongruenceTemplate {
            id: "trivial-3-mod-4".into(),
            family: "hurwitz".into(),
            curve: None,
            modulus_exponent: 1,
            prime_filters: vec![PrimeFilter::Congruent { modulus: 4, residue: 3 }],
            index_constraints: vec![],
            lhs: Expr::Rat { value: "0".into() },
            rhs: Expr::Rat { value: "0".into() },
        };
        let report = template_sweep(&t, 13, 4).unwrap();
        for cell in &report.cells {
            let p: u64 = cell.params["p"].parse().unwrap();
            if p % 4 == 3 {
                assert_eq!(cell.verdict, Verdict::Pass);
                assert_eq!(cell.witness.as_deref(), Some("0"));
            } else {
                assert_eq!(cell.verdict, Verdict::Skip);
            }
        }
        assert_eq!(report.summary.fail, 0);
        assert!(report.summary.pass > 0);
    }

    #[test]
    fn sweeps_are_deterministic() {
        let t = kummer_template();
        let a = template_sweep(&t, 13, 20).unwrap();
        let b = template_sweep(&t, 13, 20).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn json_round_trip() {
        let t = kummer_template();
        let json = serde_json::to_string_pretty(&t).unwrap();
        let parsed = CongruenceTemplate::from_json(&json).unwrap();
        assert_eq!(parsed, t);
    }

    #[test]
    fn load_time_rejections() {
        let ok = serde_json::to_string(&kummer_template()).unwrap();

        let bad_family = ok.replace("\"bernoulli\"", "\"universal\"");
        assert!(matches!(
            CongruenceTemplate::from_json(&bad_family),
            Err(Error::Template(_))
        ));

        let unknown_field = ok.replacen('{', "{\"surprise\":1,", 1);
        assert!(matches!(
            CongruenceTemplate::from_json(&unknown_field),
            Err(Error::Template(_))
        ));

        let bad_var = ok.replace("\"name\":\"n\"", "\"name\":\"q\"");
        assert!(matches!(
            CongruenceTemplate::from_json(&bad_var),
            Err(Error::Template(_))
        ));

        let mut no_curve = kummer_template();
        no_curve.family = "gbh".into();
        assert!(matches!(no_curve.validate(), Err(Error::Template(_))));

        let mut zero_exp = kummer_template();
        zero_exp.modulus_exponent = 0;
        assert!(matches!(zero_exp.validate(), Err(Error::Template(_))));
    }

    #[test]
    fn gbh_cells_skip_p_equals_two_distinctly() {
        let t = CongruenceTemplate {
            id: "gbh-demo".into(),
            family: "gbh".into(),
            curve: Some((2, 4)),
            modulus_exponent: 1,
            prime_filters: vec![],
            index_constraints: vec![IndexConstraint::Divides {
                divisor: IdxExpr::Const { value: 4 },
                value: idx_var("n"),
            }],
            lhs: Expr::Family { index: idx_var("n") },
            rhs: Expr::Family { index: idx_var("n") },
        };
        let report = template_sweep(&t, 5, 8).unwrap();
        for cell in &report.cells {
            let p: u64 = cell.params["p"].parse().unwrap();
            if p == 2 {
                assert_eq!(cell.verdict, Verdict::Skip);
                assert_eq!(
                    cell.reason.as_deref(),
                    Some("p = 2 is excluded for gbh templates")
                );
            }
        }
        assert_eq!(report.summary.fail, 0);
    }

    #[test]
    fn index_cap_is_enforced() {
        let mut t = kummer_template();
        t.lhs = Expr::Family {
            index: IdxExpr::Mul {
                lhs: Box::new(idx_var("n")),
                rhs: Box::new(IdxExpr::Mul {
                    lhs: Box::new(idx_var("n")),
                    rhs: Box::new(idx_var("n")),
                }),
            },
        };
        assert!(matches!(
            template_sweep(&t, 13, 30),
            Err(Error::Template(_))
        ));
    }
}
