use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::r10::{apply_firing, FiringMove, MoveKind, PentagonConfig, NODES};

use super::EngineError;

/// Generator used for puzzles: ChaCha8 seeded through `seed_from_u64`, one
/// `random_range(0..20)` draw per move (node = draw / 4, kind = draw % 4 in
/// the order A, B, −A, −B).
pub const PUZZLE_RNG: &str = "chacha8";

pub const MAX_DIFFICULTY: usize = 100_000;

/// A configuration reachable from all zeros, for the player to fire back to
/// all zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Puzzle {
    pub config: PentagonConfig,
    pub seed: u64,
    pub moves_applied: usize,
    pub rng: String,
}

pub fn cmd_puzzle(seed: u64, difficulty: usize) -> Result<Puzzle, EngineError> {
    if difficulty == 0 {
        return Err(EngineError::Validation("difficulty must be at least 1".into()));
    }
    if difficulty > MAX_DIFFICULTY {
        return Err(EngineError::Validation(format!("difficulty {difficulty} exceeds {MAX_DIFFICULTY}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut config = PentagonConfig::ZERO;
    for _ in 0..difficulty {
        let draw = rng.random_range(0..NODES * 4);
        let m = FiringMove { node: draw / 4, kind: MoveKind::ALL[draw % 4] };
        config = apply_firing(&config, m);
    }
    Ok(Puzzle { config, seed, moves_applied: difficulty, rng: PUZZLE_RNG.to_string() })
}
