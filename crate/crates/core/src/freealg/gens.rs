use std::fmt;
use std::sync::Arc;

use super::AlgebraError;

/// Ordered, finite set of named noncommuting generators.
#[derive(Clone, Debug, Eq)]
pub struct GeneratorSet {
    names: Arc<[String]>,
}

impl PartialEq for GeneratorSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GeneratorSet {
    /// At most 255 generators; names must be distinct ASCII identifiers.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(AlgebraError::InvalidGenerators("at least one generator is required".into()));
        }
        if names.len() > u8::MAX as usize {
            return Err(AlgebraError::InvalidGenerators(format!(
                "{} generators exceeds the limit of 255",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(AlgebraError::InvalidGenerators(format!("'{n}' is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(AlgebraError::InvalidGenerators(format!("duplicate name '{n}'")));
            }
        }
        Ok(GeneratorSet { names: names.into() })
    }

    /// `x, y, z` for up to three generators, otherwise `x1 .. xl`.
    pub fn standard(count: usize) -> Self {
        assert!((1..=255).contains(&count), "generator count must be in 1..=255");
        let names: Vec<String> = if count <= 3 {
            ["x", "y", "z"][..count].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=count).map(|i| format!("x{i}")).collect()
        };
        GeneratorSet { names: names.into() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn check_same(&self, other: &GeneratorSet) -> Result<(), AlgebraError> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::GeneratorMismatch { left: self.to_string(), right: other.to_string() })
        }
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(", "))
    }
}
