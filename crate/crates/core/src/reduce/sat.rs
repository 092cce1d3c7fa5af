use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A variable (from 1) with a polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn eval(&self, asg: &Assignment) -> bool {
        asg.value(self.var) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { '+' } else { '-' };
        write!(f, "{sign}{}", self.var)
    }
}

impl FromStr for Literal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (positive, rest) = match s.as_bytes().first() {
            Some(b'+') => (true, &s[1..]),
            Some(b'-') => (false, &s[1..]),
            _ => {
                return Err(Error::invalid(format!(
                    "literal `{s}` must start with + or -"
                )))
            }
        };
        let var: usize = rest
            .parse()
            .map_err(|_| Error::invalid(format!("bad variable in literal `{s}`")))?;
        if var == 0 {
            return Err(Error::invalid("variables are numbered from 1"));
        }
        Ok(Literal { var, positive })
    }
}

/// Where a literal of a variable sits: clause `clause` (from 1), position
/// `slot` (1 or 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub clause: usize,
    pub slot: usize,
    pub positive: bool,
}

/// A 2SAT instance in which every variable occurs in exactly three clauses
/// with mixed polarity. `occurrences(i)` lists the literals of `x_i` as
/// `x_i^1` (positive), `x_i^2`, `x_i^3` (negative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sat32Instance {
    n: usize,
    clauses: Vec<[Literal; 2]>,
    occurrences: Vec<[Occurrence; 3]>,
}

/// Validates raw clauses over variables `1..=n`.
///
/// Each variable's literals are ordered by clause; the first positive one
/// becomes `x^1`, the last negative one `x^3`, and the remaining one `x^2`.
pub fn normalize_sat32(n: usize, clauses: Vec<[Literal; 2]>) -> Result<Sat32Instance> {
    if n == 0 {
        return Err(Error::invalid("instance needs at least one variable"));
    }
    let mut by_var: Vec<Vec<Occurrence>> = vec![Vec::new(); n];
    for (j, clause) in clauses.iter().enumerate() {
        let j = j + 1;
        if clause[0].var == clause[1].var {
            return Err(Error::DuplicateVariable {
                clause: j,
                var: clause[0].var,
            });
        }
        for (h, lit) in clause.iter().enumerate() {
            if lit.var == 0 || lit.var > n {
                return Err(Error::invalid(format!(
                    "clause {j} uses variable {} outside 1..={n}",
                    lit.var
                )));
            }
            by_var[lit.var - 1].push(Occurrence {
                clause: j,
                slot: h + 1,
                positive: lit.positive,
            });
        }
    }
    let mut occurrences = Vec::with_capacity(n);
    for (i, occ) in by_var.into_iter().enumerate() {
        let var = i + 1;
        if occ.len() != 3 {
            return Err(Error::OccurrenceCount {
                var,
                count: occ.len(),
            });
        }
        let first = occ.iter().position(|o| o.positive);
        let last = occ.iter().rposition(|o| !o.positive);
        let (Some(first), Some(last)) = (first, last) else {
            return Err(Error::UniformPolarity { var });
        };
        let middle = (0..3)
            .find(|&k| k != first && k != last)
            .expect("three occurrences");
        occurrences.push([occ[first], occ[middle], occ[last]]);
    }
    Ok(Sat32Instance {
        n,
        clauses,
        occurrences,
    })
}

impl Sat32Instance {
    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 2]] {
        &self.clauses
    }

    pub fn clause(&self, j: usize) -> [Literal; 2] {
        self.clauses[j - 1]
    }

    /// `[x_i^1, x_i^2, x_i^3]`.
    pub fn occurrences(&self, i: usize) -> &[Occurrence; 3] {
        &self.occurrences[i - 1]
    }

    pub fn satisfied_count(&self, asg: &Assignment) -> usize {
        self.clauses
            .iter()
            .filter(|c| c.iter().any(|l| l.eval(asg)))
            .count()
    }
}

/// Truth values of `x_1..x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment(values)
    }

    pub fn all(n: usize, value: bool) -> Self {
        Assignment(vec![value; n])
    }

    /// Assignment of variables `1..=n` from signed literals, one per variable.
    pub fn from_literals(n: usize, lits: &[Literal]) -> Result<Self> {
        let mut values = vec![None; n];
        for lit in lits {
            if lit.var == 0 || lit.var > n {
                return Err(Error::invalid(format!(
                    "variable {} outside 1..={n}",
                    lit.var
                )));
            }
            if values[lit.var - 1].replace(lit.positive).is_some() {
                return Err(Error::invalid(format!(
                    "variable {} assigned twice",
                    lit.var
                )));
            }
        }
        values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::invalid(format!("variable {} is unassigned", i + 1)))
            })
            .collect::<Result<Vec<_>>>()
            .map(Assignment)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self, var: usize) -> bool {
        self.0[var - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        self.0.iter().enumerate().map(|(i, &positive)| Literal {
            var: i + 1,
            positive,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sat2() -> Vec<[Literal; 2]> {
        vec![
            [Literal::pos(1), Literal::pos(2)],
            [Literal::pos(1), Literal::neg(2)],
            [Literal::neg(1), Literal::neg(2)],
        ]
    }

    #[test]
    fn literal_lists() {
        let sat = normalize_sat32(2, sat2()).unwrap();
        let x2: Vec<_> = sat
            .occurrences(2)
            .iter()
            .map(|o| (o.clause, o.positive))
            .collect();
        assert_eq!(x2, vec![(1, true), (2, false), (3, false)]);
        let x1: Vec<_> = sat
            .occurrences(1)
            .iter()
            .map(|o| (o.clause, o.positive))
            .collect();
        assert_eq!(x1, vec![(1, true), (2, true), (3, false)]);
    }

    #[test]
    fn negative_first_is_reordered() {
        // x1 occurs as -, +, + in clause order.
        let clauses = vec![
            [Literal::neg(1), Literal::pos(2)],
            [Literal::pos(1), Literal::neg(2)],
            [Literal::pos(1), Literal::neg(2)],
        ];
        let sat = normalize_sat32(2, clauses).unwrap();
        let x1: Vec<_> = sat
            .occurrences(1)
            .iter()
            .map(|o| (o.clause, o.positive))
            .collect();
        assert_eq!(x1, vec![(2, true), (3, true), (1, false)]);
    }

    #[test]
    fn validation_errors() {
        let uniform = vec![
            [Literal::pos(1), Literal::pos(2)],
            [Literal::pos(1), Literal::neg(2)],
            [Literal::pos(1), Literal::neg(2)],
        ];
        assert!(matches!(
            normalize_sat32(2, uniform),
            Err(Error::UniformPolarity { var: 1 })
        ));
        let dup = vec![[Literal::pos(1), Literal::neg(1)]];
        assert!(matches!(
            normalize_sat32(1, dup),
            Err(Error::DuplicateVariable { clause: 1, var: 1 })
        ));
        let short = vec![[Literal::pos(1), Literal::neg(2)]];
        assert!(matches!(
            normalize_sat32(2, short),
            Err(Error::OccurrenceCount { var: 1, count: 1 })
        ));
    }

    #[test]
    fn satisfied_counts() {
        let sat = normalize_sat32(2, sat2()).unwrap();
        assert_eq!(sat.satisfied_count(&Assignment::all(2, true)), 2);
        assert_eq!(sat.satisfied_count(&Assignment::all(2, false)), 2);
        assert_eq!(sat.satisfied_count(&Assignment::new(vec![true, false])), 3);
    }

    #[test]
    fn literal_text() {
        assert_eq!("-12".parse::<Literal>().unwrap(), Literal::neg(12));
        assert_eq!(Literal::pos(3).to_string(), "+3");
        assert!("3".parse::<Literal>().is_err());
        assert!("+0".parse::<Literal>().is_err());
    }
}
