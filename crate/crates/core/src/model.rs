//! Cards, winning-pattern families and line sets.
//!
//! A card is an `n x n` grid whose column `j` (0-indexed) draws `n` distinct
//! numbers from `[m*j + 1, m*(j+1)]`. A line is the set of numbers a winning
//! pattern requires; multiplayer line sets are deduplicated by number-set.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{BingoError, Result};
use crate::seed::mix_seed;

/// Game parameters: card side `n`, values per column `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CardSpec {
    pub n: usize,
    pub m: usize,
    /// Center square pre-marked; its number is required by no pattern.
    pub free_space: bool,
}

impl CardSpec {
    /// Validated spec with the classical free center square.
    pub fn new(n: usize, m: usize) -> Result<Self> {
        let spec = CardSpec { n, m, free_space: true };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_free_space(mut self, free_space: bool) -> Self {
        self.free_space = free_space;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 || self.n.is_multiple_of(2) {
            return Err(BingoError::InvalidSpec(format!(
                "n must be odd and at least 3, got {}",
                self.n
            )));
        }
        if self.m < self.n {
            return Err(BingoError::InvalidSpec(format!(
                "m must be at least n (m={}, n={})",
                self.m, self.n
            )));
        }
        if self.n.checked_mul(self.m).is_none_or(|p| p > u32::MAX as usize) {
            return Err(BingoError::InvalidSpec("pool size overflows".into()));
        }
        Ok(())
    }

    /// Number of distinct callable values, `m * n`.
    pub fn pool_size(&self) -> usize {
        self.m * self.n
    }

    /// Inclusive value range of column `col` (0-indexed).
    pub fn column_range(&self, col: usize) -> (u32, u32) {
        let lo = self.m * col + 1;
        (lo as u32, (self.m * (col + 1)) as u32)
    }

    pub fn center(&self) -> (usize, usize) {
        (self.n / 2, self.n / 2)
    }
}

/// A filled card. `grid[row][col]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Card {
    spec: CardSpec,
    grid: Vec<Vec<u32>>,
}

impl Card {
    /// Builds a card from an explicit grid, checking the column intervals and
    /// distinctness.
    pub fn from_grid(spec: CardSpec, grid: Vec<Vec<u32>>) -> Result<Self> {
        spec.validate()?;
        let n = spec.n;
        if grid.len() != n || grid.iter().any(|row| row.len() != n) {
            return Err(BingoError::Validation(format!("grid must be {n}x{n}")));
        }
        for col in 0..n {
            let (lo, hi) = spec.column_range(col);
            let mut seen: Vec<u32> = grid.iter().map(|row| row[col]).collect();
            if let Some(v) = seen.iter().find(|&&v| v < lo || v > hi) {
                return Err(BingoError::Validation(format!(
                    "value {v} in column {} outside [{lo}, {hi}]",
                    col + 1
                )));
            }
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return Err(BingoError::Validation(format!(
                    "duplicate value in column {}",
                    col + 1
                )));
            }
        }
        Ok(Card { spec, grid })
    }

    pub fn spec(&self) -> &CardSpec {
        &self.spec
    }

    pub fn grid(&self) -> &[Vec<u32>] {
        &self.grid
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.grid[row][col]
    }

    /// True for the pre-marked center when the spec has a free space.
    pub fn is_free(&self, row: usize, col: usize) -> bool {
        self.spec.free_space && (row, col) == self.spec.center()
    }
}

/// Draws a card: each column is an ordered uniform sample of `n` distinct
/// values from its interval. Pure in `(spec, seed)`.
pub fn generate_card(spec: CardSpec, seed: u64) -> Result<Card> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = spec.n;
    let mut grid = vec![vec![0u32; n]; n];
    for col in 0..n {
        let (lo, hi) = spec.column_range(col);
        let mut values: Vec<u32> = (lo..=hi).collect();
        let (picked, _) = values.partial_shuffle(&mut rng, n);
        for (row, &v) in picked.iter().enumerate() {
            grid[row][col] = v;
        }
    }
    Ok(Card { spec, grid })
}

/// `count` cards; card `i` is drawn from a sub-seed of `(master_seed, i)`.
pub fn generate_cards(spec: CardSpec, count: usize, master_seed: u64) -> Result<Vec<Card>> {
    (0..count)
        .map(|i| generate_card(spec, mix_seed(master_seed, i as u64)))
        .collect()
}

/// A grid position `(row, col)`.
pub type Position = (usize, usize);

/// Which squares must be marked to win.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum PatternFamily {
    /// Every row, every column and both diagonals.
    #[default]
    StandardLines,
    FourCorners,
    Custom(Vec<Vec<Position>>),
}

impl PatternFamily {
    /// Position sets of every pattern on an `n x n` card.
    pub fn patterns(&self, n: usize) -> Result<Vec<Vec<Position>>> {
        match self {
            PatternFamily::StandardLines => {
                let mut out = Vec::with_capacity(2 * n + 2);
                for r in 0..n {
                    out.push((0..n).map(|c| (r, c)).collect());
                }
                for c in 0..n {
                    out.push((0..n).map(|r| (r, c)).collect());
                }
                out.push((0..n).map(|i| (i, i)).collect());
                out.push((0..n).map(|i| (i, n - 1 - i)).collect());
                Ok(out)
            }
            PatternFamily::FourCorners => {
                Ok(vec![vec![(0, 0), (0, n - 1), (n - 1, 0), (n - 1, n - 1)]])
            }
            PatternFamily::Custom(sets) => {
                if sets.is_empty() {
                    return Err(BingoError::Validation("custom family has no patterns".into()));
                }
                for set in sets {
                    if set.is_empty() {
                        return Err(BingoError::Validation("empty custom pattern".into()));
                    }
                    if let Some(&(r, c)) = set.iter().find(|&&(r, c)| r >= n || c >= n) {
                        return Err(BingoError::Validation(format!(
                            "position ({r}, {c}) outside a {n}x{n} card"
                        )));
                    }
                }
                Ok(sets.clone())
            }
        }
    }
}

/// One winning pattern as a sorted set of numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub numbers: Vec<u32>,
    /// `(card index, pattern index)` the line came from.
    pub source: (usize, usize),
}

/// Lines over the number pool `[1, universe_size]`, no two with the same
/// number-set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineSet {
    universe_size: usize,
    lines: Vec<Line>,
}

impl LineSet {
    /// Builds a line set from raw number lists. Each list is canonicalised
    /// (sorted, deduplicated); repeated number-sets keep their first
    /// occurrence.
    pub fn new(universe_size: usize, raw: Vec<Vec<u32>>) -> Result<Self> {
        let lines = raw
            .into_iter()
            .enumerate()
            .map(|(i, numbers)| Line { numbers, source: (0, i) })
            .collect();
        Self::from_lines(universe_size, lines)
    }

    pub fn from_lines(universe_size: usize, lines: Vec<Line>) -> Result<Self> {
        let mut out: Vec<Line> = Vec::with_capacity(lines.len());
        let mut seen = std::collections::HashSet::new();
        for mut line in lines {
            line.numbers.sort_unstable();
            line.numbers.dedup();
            if line.numbers.is_empty() {
                return Err(BingoError::Validation("empty line".into()));
            }
            if let Some(&v) = line
                .numbers
                .iter()
                .find(|&&v| v == 0 || v as usize > universe_size)
            {
                return Err(BingoError::Validation(format!(
                    "number {v} outside pool [1, {universe_size}]"
                )));
            }
            if seen.insert(line.numbers.clone()) {
                out.push(line);
            }
        }
        Ok(LineSet { universe_size, lines: out })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn min_line_size(&self) -> usize {
        self.lines.iter().map(|l| l.numbers.len()).min().unwrap_or(0)
    }

    /// Distinct numbers covered by the union of all lines, ascending.
    pub fn covered(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.lines.iter().flat_map(|l| l.numbers.iter().copied()).collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Canonical number-sets, sorted, for order-insensitive comparison.
    pub fn number_sets(&self) -> Vec<Vec<u32>> {
        let mut sets: Vec<Vec<u32>> = self.lines.iter().map(|l| l.numbers.clone()).collect();
        sets.sort();
        sets
    }
}

fn card_lines(card_index: usize, card: &Card, patterns: &[Vec<Position>]) -> Result<Vec<Line>> {
    patterns
        .iter()
        .enumerate()
        .map(|(p, positions)| {
            let numbers: Vec<u32> = positions
                .iter()
                .filter(|&&(r, c)| !card.is_free(r, c))
                .map(|&(r, c)| card.get(r, c))
                .collect();
            if numbers.is_empty() {
                return Err(BingoError::Validation(format!(
                    "pattern {p} covers only the free space"
                )));
            }
            Ok(Line { numbers, source: (card_index, p) })
        })
        .collect()
}

/// The family's patterns instantiated as number-sets on one card.
pub fn lines_of(card: &Card, family: &PatternFamily) -> Result<LineSet> {
    let patterns = family.patterns(card.spec.n)?;
    LineSet::from_lines(card.spec.pool_size(), card_lines(0, card, &patterns)?)
}

/// The unique lines across several cards sharing one spec.
pub fn union_lines(cards: &[Card], family: &PatternFamily) -> Result<LineSet> {
    let first = cards
        .first()
        .ok_or_else(|| BingoError::Validation("no cards given".into()))?;
    if let Some(i) = cards.iter().position(|c| c.spec != first.spec) {
        return Err(BingoError::Validation(format!(
            "card {i} has a different spec from card 0"
        )));
    }
    let patterns = family.patterns(first.spec.n)?;
    let mut lines = Vec::with_capacity(cards.len() * patterns.len());
    for (i, card) in cards.iter().enumerate() {
        lines.extend(card_lines(i, card, &patterns)?);
    }
    LineSet::from_lines(first.spec.pool_size(), lines)
}

/// Lines of the bare geometry: square `(r, c)` is number `r*n + c + 1`, over a
/// universe of `n*n`. Any single card has the same coverage structure.
pub fn geometry_lines(n: usize, family: &PatternFamily, free_space: bool) -> Result<LineSet> {
    if n == 0 {
        return Err(BingoError::Validation("n must be positive".into()));
    }
    let center = (n / 2, n / 2);
    let lines = family
        .patterns(n)?
        .into_iter()
        .enumerate()
        .map(|(p, positions)| Line {
            numbers: positions
                .into_iter()
                .filter(|&pos| !(free_space && pos == center))
                .map(|(r, c)| (r * n + c + 1) as u32)
                .collect(),
            source: (0, p),
        })
        .collect();
    LineSet::from_lines(n * n, lines)
}

#[derive(Serialize, Deserialize)]
struct CardRecord {
    n: usize,
    m: usize,
    free_space: bool,
    grid: Vec<Vec<u32>>,
}

impl Serialize for Card {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CardRecord {
            n: self.spec.n,
            m: self.spec.m,
            free_space: self.spec.free_space,
            grid: self.grid.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Card {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = CardRecord::deserialize(d)?;
        let spec = CardSpec { n: rec.n, m: rec.m, free_space: rec.free_space };
        Card::from_grid(spec, rec.grid).map_err(serde::de::Error::custom)
    }
}

/// The multiplayer card file: all cards plus the master seed that drew them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CardSet {
    pub master_seed: u64,
    pub cards: Vec<Card>,
}
