//! Budgeted query oracle: enforces the domain and the query budget, records
//! the transcript, and memoizes repeated points (a repeated point is one
//! piece of information, not a new query).

use super::AlgoError;
use crate::classes::DOMAIN_TOL;
use crate::geometry::p_norm_unchecked;
use crate::real::{real, Real};
use std::collections::HashMap;

/// The transcript of distinct queries, in issue order.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryLog<T> {
    pub points: Vec<Vec<T>>,
    pub values: Vec<T>,
}

impl<T: Real> QueryLog<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn all_zero(&self) -> bool {
        self.values.iter().all(|v| *v == T::zero())
    }
}

pub struct BudgetedOracle<'a, T> {
    f: &'a dyn Fn(&[T]) -> T,
    budget: usize,
    log: QueryLog<T>,
    memo: HashMap<Vec<u64>, T>,
}

impl<'a, T: Real> BudgetedOracle<'a, T> {
    pub fn new(f: &'a dyn Fn(&[T]) -> T, budget: usize) -> Self {
        BudgetedOracle {
            f,
            budget,
            log: QueryLog {
                points: Vec::new(),
                values: Vec::new(),
            },
            memo: HashMap::new(),
        }
    }

    /// Evaluate f at x ∈ Ω. Re-queries of a previously seen point are free.
    pub fn query(&mut self, x: &[T]) -> Result<T, AlgoError> {
        let key: Vec<u64> = x.iter().map(|v| v.to_f64().unwrap().to_bits()).collect();
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let norm = p_norm_unchecked(x, real(2.0));
        if norm > T::one() + real(DOMAIN_TOL) {
            return Err(AlgoError::OutOfDomain(norm.to_f64().unwrap()));
        }
        if self.log.len() >= self.budget {
            return Err(AlgoError::BudgetExceeded(self.budget));
        }
        let v = (self.f)(x);
        self.log.points.push(x.to_vec());
        self.log.values.push(v);
        self.memo.insert(key, v);
        Ok(v)
    }

    pub fn queries_used(&self) -> usize {
        self.log.len()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn log(&self) -> &QueryLog<T> {
        &self.log
    }

    pub fn into_log(self) -> QueryLog<T> {
        self.log
    }
}
