//! Pass/fail records shared by the verification suites.

use crate::error::Result;
use serde::Serialize;
use std::fmt::Display;
use std::time::Instant;

/// Both sides of a failed identity, fully serialized.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub millis: u64,
}

impl Check {
    /// Runs `body`, which returns `None` on success and a counterexample on
    /// failure. Errors count as failures.
    pub fn run(id: impl Into<String>, anchor: impl Into<String>, body: impl FnOnce() -> Result<Option<Counterexample>>) -> Check {
        let id = id.into();
        let start = Instant::now();
        let counterexample = match body() {
            Ok(c) => c,
            Err(e) => Some(Counterexample {
                input: id.clone(),
                lhs: format!("error: {e}"),
                rhs: String::new(),
            }),
        };
        Check {
            id,
            anchor: anchor.into(),
            passed: counterexample.is_none(),
            counterexample,
            millis: start.elapsed().as_millis() as u64,
        }
    }
}

/// `None` when `lhs == rhs`, else the serialized pair.
pub fn compare<T: PartialEq + Display>(input: impl Into<String>, lhs: &T, rhs: &T) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample {
        input: input.into(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Maps `f` over `items` on scoped worker threads, keeping input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let f = &f;
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(f).collect::<Vec<R>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Orders checks by id for report assembly; equal ids keep their order.
pub fn sort_by_id(checks: &mut [Check]) {
    checks.sort_by(|a, b| a.id.cmp(&b.id));
}
