use super::GrowthError;

/// Letter codes used for words over `{x, y}`.
pub const X: u8 = 0;
pub const Y: u8 = 1;

/// How the inner factor of the recursion is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Reading {
    /// `u_{n+1} = x^{b^n} u_n x^{b^n} y x^{b^n} u_n x^{b^n}`.
    #[default]
    Indexed,
    /// The inner factor as a literal power `u^n`; rejected rather than guessed.
    LiteralPower,
}

/// `u_1 = xyx`, `u_{n+1} = x^{b^n} u_n x^{b^n} y x^{b^n} u_n x^{b^n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecurrentWordSpec {
    pub base: u64,
    pub depth: u32,
    pub reading: Reading,
}

impl RecurrentWordSpec {
    pub fn new(base: u64, depth: u32) -> Result<Self, GrowthError> {
        Self::with_reading(base, depth, Reading::Indexed)
    }

    pub fn with_reading(base: u64, depth: u32, reading: Reading) -> Result<Self, GrowthError> {
        if base < 2 {
            return Err(GrowthError::InvalidSpec(format!("base must be at least 2, got {base}")));
        }
        if depth < 1 {
            return Err(GrowthError::InvalidSpec("depth must be at least 1".into()));
        }
        Ok(RecurrentWordSpec { base, depth, reading })
    }

    /// `L_1, …, L_N`; `None` once a length overflows `u128`.
    pub fn lengths(&self) -> Option<Vec<u128>> {
        let mut out = vec![3u128];
        let mut power = 1u128;
        for _ in 1..self.depth {
            power = power.checked_mul(self.base as u128)?;
            let last = *out.last().expect("nonempty");
            out.push(last.checked_mul(2)?.checked_add(power.checked_mul(4)?)?.checked_add(1)?);
        }
        Some(out)
    }

    pub fn length(&self) -> Option<u128> {
        self.lengths().map(|l| l[l.len() - 1])
    }

    /// `r_N = 1 + b + … + b^{N-1}`, the longest run of `x` in `u_N`.
    pub fn longest_x_run(&self) -> Option<u128> {
        let mut run = 1u128;
        let mut power = 1u128;
        for _ in 1..self.depth {
            power = power.checked_mul(self.base as u128)?;
            run = run.checked_add(power)?;
        }
        Some(run)
    }

    /// `min(L_{N-1}, r_N)`: factors up to this length are the same in `u_N`
    /// and every deeper word. The run bound matters for small bases, where
    /// `x^{r_N + 1}` already appears in `u_{N+1}` below `L_{N-1}`.
    pub fn stable_length(&self) -> Option<u128> {
        let run = self.longest_x_run()?;
        if self.depth < 2 {
            return Some(run);
        }
        self.lengths().map(|l| l[l.len() - 2].min(run))
    }
}

pub const DEFAULT_MAX_WORD_LEN: u128 = 50_000_000;

/// Builds `u_N` as letter codes ([`X`], [`Y`]).
pub fn build_u(spec: &RecurrentWordSpec, max_len: u128) -> Result<Vec<u8>, GrowthError> {
    if spec.reading == Reading::LiteralPower {
        return Err(GrowthError::UnsupportedReading);
    }
    let required = spec.length();
    match required {
        Some(r) if r <= max_len => {}
        _ => return Err(GrowthError::WordTooLong { required, budget: max_len }),
    }
    let mut u = vec![X, Y, X];
    let mut power = 1usize;
    for _ in 1..spec.depth {
        power *= spec.base as usize;
        let run = vec![X; power];
        let mut next = Vec::with_capacity(2 * u.len() + 4 * power + 1);
        next.extend_from_slice(&run);
        next.extend_from_slice(&u);
        next.extend_from_slice(&run);
        next.push(Y);
        next.extend_from_slice(&run);
        next.extend_from_slice(&u);
        next.extend_from_slice(&run);
        u = next;
    }
    Ok(u)
}

pub fn to_ascii(word: &[u8]) -> String {
    word.iter().map(|&c| if c == X { 'x' } else { 'y' }).collect()
}

pub fn from_ascii(text: &str) -> Result<Vec<u8>, GrowthError> {
    text.chars()
        .map(|ch| match ch {
            'x' => Ok(X),
            'y' => Ok(Y),
            other => Err(GrowthError::InvalidSpec(format!("word letters must be 'x' or 'y', found {other:?}"))),
        })
        .collect()
}
