//! Multi-index enumeration and small combinatorics shared by the Taylor
//! machinery and the class membership checks.

/// Multi-index γ ∈ N₀^d.
pub type MultiIndex = Vec<usize>;

/// binom(n, k) as f64 (exact for the small arguments used here).
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

/// γ! = ∏ γ_i!
pub fn multi_factorial(gamma: &[usize]) -> f64 {
    gamma.iter().map(|&g| factorial(g)).product()
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// All multi-indices of order exactly `order` in `d` variables, lexicographic.
pub fn multi_indices_of_order(d: usize, order: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut current = vec![0usize; d];
    fill(&mut out, &mut current, 0, order);
    out
}

fn fill(out: &mut Vec<MultiIndex>, current: &mut MultiIndex, pos: usize, remaining: usize) {
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(current.clone());
        current[pos] = 0;
        return;
    }
    for head in (0..=remaining).rev() {
        current[pos] = head;
        fill(out, current, pos + 1, remaining - head);
    }
    current[pos] = 0;
}

/// All multi-indices with |γ| ≤ max_order, grouped by increasing order.
pub fn multi_indices_up_to(d: usize, max_order: usize) -> Vec<MultiIndex> {
    (0..=max_order)
        .flat_map(|k| multi_indices_of_order(d, k))
        .collect()
}

/// Number of multi-indices with |γ| ≤ s in d variables: binom(d+s, s).
pub fn coefficient_count(d: usize, s: usize) -> usize {
    binomial(d + s, s) as usize
}

/// Lattice points v ∈ Z^d with ‖v‖₁ ≤ s: the deduplicated tensor
/// central-difference stencil size for all derivatives up to order s.
/// Equals Σ_j 2^j · binom(d,j) · binom(s,j).
pub fn stencil_point_count(d: usize, s: usize) -> usize {
    let mut total = 0.0;
    for j in 0..=s.min(d) {
        total += 2f64.powi(j as i32) * binomial(d, j) * binomial(s, j);
    }
    total.round() as usize
}
