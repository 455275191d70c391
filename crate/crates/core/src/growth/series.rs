use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::GrowthError;

/// Filtered dimensions `d_1, …, d_M` with `d_0 = 1` implicit, alongside the
/// graded counts `c_n = d_n - d_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthSeries {
    label: String,
    dims: Vec<BigUint>,
    graded: Vec<BigUint>,
}

impl GrowthSeries {
    pub fn from_dims(label: impl Into<String>, dims: Vec<BigUint>) -> Result<Self, GrowthError> {
        let mut graded = Vec::with_capacity(dims.len());
        let mut prev = BigUint::one();
        for (i, d) in dims.iter().enumerate() {
            if d < &prev {
                return Err(GrowthError::InvalidSeries(format!("d_{} = {d} is below d_{} = {prev}", i + 1, i)));
            }
            graded.push(d - &prev);
            prev = d.clone();
        }
        Ok(GrowthSeries { label: label.into(), dims, graded })
    }

    pub fn from_graded(label: impl Into<String>, graded: Vec<BigUint>) -> Self {
        let mut run = BigUint::one();
        let dims = graded
            .iter()
            .map(|c| {
                run += c;
                run.clone()
            })
            .collect();
        GrowthSeries { label: label.into(), dims, graded }
    }

    pub fn from_fn(label: impl Into<String>, max_n: usize, d: impl Fn(u64) -> BigUint) -> Result<Self, GrowthError> {
        Self::from_dims(label, (1..=max_n as u64).map(d).collect())
    }

    /// `d_n = n + 1`: one commuting variable.
    pub fn linear(max_n: usize) -> Self {
        Self::from_fn("n+1", max_n, |n| BigUint::from(n + 1)).expect("increasing")
    }

    /// `d_n = (n+1)(n+2)/2`: two commuting variables.
    pub fn quadratic(max_n: usize) -> Self {
        Self::from_fn("(n+1)(n+2)/2", max_n, |n| BigUint::from((n + 1) * (n + 2) / 2)).expect("increasing")
    }

    /// `d_n = 2^{n+1} - 1`: words of length at most `n` on two letters.
    pub fn free_two(max_n: usize) -> Self {
        Self::from_fn("2^(n+1)-1", max_n, |n| (BigUint::one() << (n as usize + 1)) - 1u32).expect("increasing")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// `d_n` for `0 <= n <= len`.
    pub fn d(&self, n: usize) -> BigUint {
        if n == 0 {
            BigUint::one()
        } else {
            self.dims[n - 1].clone()
        }
    }

    /// `c_n` for `1 <= n <= len`.
    pub fn c(&self, n: usize) -> &BigUint {
        &self.graded[n - 1]
    }

    pub fn dims(&self) -> &[BigUint] {
        &self.dims
    }

    pub fn graded(&self) -> &[BigUint] {
        &self.graded
    }

    pub fn truncated(&self, max_n: usize) -> GrowthSeries {
        let m = max_n.min(self.len());
        GrowthSeries { label: self.label.clone(), dims: self.dims[..m].to_vec(), graded: self.graded[..m].to_vec() }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,d_n,c_n\n");
        for (i, (d, c)) in self.dims.iter().zip(&self.graded).enumerate() {
            writeln!(out, "{},{d},{c}", i + 1).expect("writing to a String");
        }
        out
    }

    pub fn from_csv(label: impl Into<String>, text: &str) -> Result<Self, GrowthError> {
        let bad = |line: usize, msg: &str| GrowthError::InvalidSeries(format!("csv line {line}: {msg}"));
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        match lines.next() {
            Some((_, h)) if h.trim() == "n,d_n,c_n" => {}
            Some((i, _)) => return Err(bad(i + 1, "expected header n,d_n,c_n")),
            None => return Err(bad(1, "empty input")),
        }
        let mut dims = Vec::new();
        let mut graded = Vec::new();
        for (i, line) in lines {
            let fields: Vec<&str> = line.trim().split(',').collect();
            let [n, d, c] = fields[..] else {
                return Err(bad(i + 1, "expected three fields"));
            };
            if n.parse::<usize>().ok() != Some(dims.len() + 1) {
                return Err(bad(i + 1, "n must count up from 1"));
            }
            let d: BigUint = d.parse().map_err(|_| bad(i + 1, "d_n is not a nonnegative integer"))?;
            let c: BigUint = c.parse().map_err(|_| bad(i + 1, "c_n is not a nonnegative integer"))?;
            dims.push(d);
            graded.push(c);
        }
        let series = Self::from_dims(label, dims)?;
        if series.graded != graded {
            return Err(GrowthError::InvalidSeries("c_n column disagrees with differences of d_n".into()));
        }
        Ok(series)
    }

    /// Whether `d_n = d_{n+1}` from some point on within the available range.
    pub fn is_eventually_constant(&self) -> bool {
        self.graded.last().is_some_and(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn graded_and_filtered_agree() {
        let s = GrowthSeries::from_graded("xyx", big(&[2, 2, 1]));
        assert_eq!(s.dims(), &big(&[3, 5, 6])[..]);
        assert_eq!(GrowthSeries::from_dims("xyx", big(&[3, 5, 6])).unwrap().graded(), &big(&[2, 2, 1])[..]);
        assert!(GrowthSeries::from_dims("bad", big(&[3, 2])).is_err());
        assert!(GrowthSeries::from_dims("bad", big(&[0])).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(GrowthSeries::linear(3).dims(), &big(&[2, 3, 4])[..]);
        assert_eq!(GrowthSeries::quadratic(3).dims(), &big(&[3, 6, 10])[..]);
        assert_eq!(GrowthSeries::free_two(3).dims(), &big(&[3, 7, 15])[..]);
        assert_eq!(GrowthSeries::free_two(200).d(200).bits(), 201);
    }

    #[test]
    fn csv_roundtrip() {
        let s = GrowthSeries::quadratic(5);
        let text = s.to_csv();
        assert!(text.starts_with("n,d_n,c_n\n1,3,2\n2,6,3\n"));
        assert_eq!(GrowthSeries::from_csv("(n+1)(n+2)/2", &text).unwrap(), s);
        assert!(GrowthSeries::from_csv("x", "n,d_n,c_n\n1,3,1\n").is_err());
        assert!(GrowthSeries::from_csv("x", "n,d\n1,3\n").is_err());
        assert!(GrowthSeries::from_csv("x", "n,d_n,c_n\n2,3,2\n").is_err());
    }
}
