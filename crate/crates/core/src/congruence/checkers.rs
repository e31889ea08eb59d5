//! The named checkers: von Staudt-Clausen and Kummer shapes for the
//! classical, Hurwitz, and universal families.

use num_traits::ToPrimitive;

use crate::families::{
    bernoulli, bernoulli_table, hurwitz_table, universal_bernoulli, universal_bernoulli_table,
};
use crate::mpoly::{MPoly, Monomial};
use crate::primes::primes_up_to;
use crate::rational::{factor, padic_valuation};
use crate::{Error, Rat, Result};

use super::{CheckResult, Report, SweepCell};

fn check_even(n: u64) -> Result<()> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::EvenIndexRequired(n));
    }
    Ok(())
}

/// Primes p with (p-1) | n, the denominator primes of the von Staudt sum.
fn staudt_primes(n: u64) -> Vec<u64> {
    primes_up_to(n + 1)
        .iter()
        .filter(|p| n % (p - 1) == 0)
        .collect()
}

/// B_n + sum over primes (p-1)|n of 1/p is an integer.
pub fn von_staudt_classical(n: u64) -> Result<CheckResult> {
    check_even(n)?;
    Ok(CheckResult {
        checker: "von-staudt-classical",
        cell: von_staudt_cell(n, &bernoulli(n)),
    })
}

fn von_staudt_cell(n: u64, bn: &Rat) -> SweepCell {
    let mut witness = bn.clone();
    for p in staudt_primes(n) {
        witness += &Rat::new(1, p);
    }
    if witness.is_integer() {
        SweepCell::pass([("n", n)], witness.to_string())
    } else {
        SweepCell::fail([("n", n)], witness.to_string(), "sum is not an integer".into())
    }
}

/// The classical check for every even n up to max_n.
pub fn von_staudt_sweep(max_n: u64) -> Report {
    let b = bernoulli_table(max_n);
    let cells = (2..=max_n)
        .step_by(2)
        .map(|n| von_staudt_cell(n, &b[n as usize]))
        .collect();
    Report::new("von-staudt-classical", cells)
}

/// The primes dividing the denominator, with multiplicities.
pub fn denominator_support(value: &Rat) -> Result<Vec<(u64, u32)>> {
    factor(value.denom())
        .into_iter()
        .map(|(p, e)| {
            let p = p.to_u64().ok_or_else(|| Error::PrimeOverflow(p.to_string()))?;
            Ok((p, e))
        })
        .collect()
}

/// For every index m = 4, 8, .., max_m: the denominator support of H_m is
/// exactly {2} plus the primes p = 1 mod 4 with (p-1) | m, all to the
/// first power.
pub fn hurwitz_denominator_law(max_m: u64) -> Result<Report> {
    let table = hurwitz_table(max_m);
    let mut cells = Vec::with_capacity(table.len());
    for (m, h) in &table {
        let support = denominator_support(h)?;
        let mut expected = vec![2u64];
        expected.extend(
            primes_up_to(m + 1)
                .iter()
                .filter(|p| p % 4 == 1 && m % (p - 1) == 0),
        );
        let primes: Vec<u64> = support.iter().map(|(p, _)| *p).collect();
        let squarefree = support.iter().all(|(_, e)| *e == 1);
        let cell = if primes == expected && squarefree {
            SweepCell::pass([("m", *m)], h.to_string())
        } else {
            SweepCell::fail(
                [("m", *m)],
                h.to_string(),
                format!("support {:?}, expected {:?} squarefree", support, expected),
            )
        };
        cells.push(cell);
    }
    Ok(Report::new("hurwitz-denominator-law", cells))
}

/// Even case: the fractional part of Bhat_n equals that of
/// -sum over primes (p-1)|n of c_(p-1)^(n/(p-1)) / p.
pub fn universal_von_staudt_even(n: u64) -> Result<CheckResult> {
    check_even(n)?;
    Ok(CheckResult {
        checker: "universal-von-staudt-even",
        cell: universal_even_cell(n, &universal_bernoulli(n)),
    })
}

fn universal_even_cell(n: u64, bhat: &MPoly) -> SweepCell {
    let lhs = bhat.frac_mod_int();
    let mut rhs = MPoly::zero();
    for p in staudt_primes(n) {
        let mono = Monomial::var((p - 1) as u32).pow((n / (p - 1)) as u32);
        rhs = rhs + MPoly::from_terms(vec![(mono, -Rat::new(1, p))]);
    }
    let witness = lhs - rhs.frac_mod_int();
    if witness.is_zero() {
        SweepCell::pass([("n", n)], witness.to_string())
    } else {
        SweepCell::fail(
            [("n", n)],
            witness.to_string(),
            "fractional parts differ".into(),
        )
    }
}

/// Odd case, two verdicts: the fractional part of Bhat_n equals that of
/// c1^(n-3) (c1^3 + c3) / 2, and (weaker) 2 Bhat_n has integer
/// coefficients.
pub fn universal_von_staudt_odd(n: u64) -> Result<Vec<CheckResult>> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::OddIndexRequired(n));
    }
    let bhat = universal_bernoulli(n);
    let (main, weak) = universal_odd_cells(n, &bhat);
    Ok(vec![
        CheckResult { checker: "universal-von-staudt-odd", cell: main },
        CheckResult { checker: "universal-von-staudt-odd-weak", cell: weak },
    ])
}

fn universal_odd_cells(n: u64, bhat: &MPoly) -> (SweepCell, SweepCell) {
    let lhs = bhat.frac_mod_int();
    let half = Rat::new(1, 2);
    let rhs = MPoly::from_terms(vec![
        (Monomial::var(1).pow(n as u32), half.clone()),
        (Monomial::var(1).pow((n - 3) as u32).mul(&Monomial::var(3)), half),
    ])
    .frac_mod_int();
    let witness = lhs - rhs;
    let main = if witness.is_zero() {
        SweepCell::pass([("n", n)], witness.to_string())
    } else {
        SweepCell::fail(
            [("n", n)],
            witness.to_string(),
            "fractional parts differ".into(),
        )
    };

    let doubled = bhat.scale(&Rat::from(2i64));
    let weak_witness = doubled.frac_mod_int();
    let weak = if doubled.is_integral() {
        SweepCell::pass([("n", n)], weak_witness.to_string())
    } else {
        SweepCell::fail(
            [("n", n)],
            weak_witness.to_string(),
            "2*Bhat_n is not integral".into(),
        )
    };
    (main, weak)
}

/// Both parities over 2..=max_n, sharing one polynomial table.  Odd
/// indices contribute two cells, told apart by the "check" parameter.
pub fn universal_von_staudt_sweep(max_n: u64) -> Report {
    let table = universal_bernoulli_table(max_n);
    let mut cells = Vec::new();
    for n in 2..=max_n {
        let bhat = &table[n as usize];
        if n % 2 == 0 {
            cells.push(universal_even_cell(n, bhat));
        } else {
            let (mut main, mut weak) = universal_odd_cells(n, bhat);
            main.params.insert("check".into(), "fractional-part".into());
            weak.params.insert("check".into(), "integrality".into());
            cells.push(main);
            cells.push(weak);
        }
    }
    Report::new("universal-von-staudt", cells)
}

/// Kummer: for p >= 5, even m < n with m = n mod (p-1) and (p-1) not
/// dividing m, B_m/m = B_n/n mod p.
pub fn kummer_classical(p: u64, m: u64, n: u64) -> Result<CheckResult> {
    if !crate::primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::KummerPrecondition(format!("p must be >= 5, got {}", p)));
    }
    if m < 2 || m % 2 != 0 || n % 2 != 0 {
        return Err(Error::KummerPrecondition(format!(
            "indices must be even and positive, got m = {}, n = {}",
            m, n
        )));
    }
    if m >= n {
        return Err(Error::KummerPrecondition(format!(
            "need m < n, got m = {}, n = {}",
            m, n
        )));
    }
    let b = bernoulli_table(n);
    Ok(CheckResult {
        checker: "kummer-classical",
        cell: kummer_cell(p, m, n, &b[m as usize], &b[n as usize]),
    })
}

fn kummer_cell(p: u64, m: u64, n: u64, bm: &Rat, bn: &Rat) -> SweepCell {
    let params = [("m", m), ("n", n), ("p", p)];
    if m % (p - 1) == 0 {
        return SweepCell::skip(params, "p-1 divides m".into());
    }
    if m % (p - 1) != n % (p - 1) {
        return SweepCell::skip(params, "m and n not congruent mod p-1".into());
    }
    let witness = bm / Rat::from(m) - bn / Rat::from(n);
    let v = padic_valuation(&witness, p).expect("p comes from the sieve");
    if v.at_least(1) {
        SweepCell::pass(params, witness.to_string())
    } else {
        SweepCell::fail(params, witness.to_string(), format!("valuation {}", v))
    }
}

/// Every congruent even pair m < n <= n_max for every prime 5 <= p <= p_max.
pub fn kummer_sweep(p_max: u64, n_max: u64) -> Report {
    let b = bernoulli_table(n_max);
    let mut cells = Vec::new();
    for p in primes_up_to(p_max).iter().filter(|p| *p >= 5) {
        for m in (2..n_max).step_by(2) {
            for n in ((m + 2)..=n_max).step_by(2) {
                if m % (p - 1) == n % (p - 1) {
                    cells.push(kummer_cell(p, m, n, &b[m as usize], &b[n as usize]));
                }
            }
        }
    }
    Report::new("kummer-classical", cells)
}
