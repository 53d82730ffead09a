use core::fmt;
use core::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A = 0,
    B = 1,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// Sign of a block. `Minus < Plus`, so blocks order as `A1- < A1+ < A2- < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// One of the blocks `A_i^±` or `B_j^±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockId {
    pub side: Side,
    pub index: u32,
    pub sign: Sign,
}

impl BlockId {
    pub fn new(side: Side, index: u32, sign: Sign) -> Self {
        BlockId { side, index, sign }
    }

    /// Position of the block among the `2n` blocks of its side.
    pub fn position(self) -> usize {
        (self.index as usize - 1) * 2 + (self.sign == Sign::Plus) as usize
    }

    pub fn from_position(side: Side, position: usize) -> Self {
        let sign = if position % 2 == 1 { Sign::Plus } else { Sign::Minus };
        BlockId { side, index: (position / 2 + 1) as u32, sign }
    }

    /// All `2n` blocks of one side in canonical order.
    pub fn all(side: Side, rank: u32) -> impl Iterator<Item = BlockId> {
        (0..2 * rank as usize).map(move |p| BlockId::from_position(side, p))
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Minus => '-',
            Sign::Plus => '+',
        };
        write!(f, "{}{}{}", self.side, self.index, sign)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseBlockError;

impl fmt::Display for ParseBlockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected a block name like \"A1+\" or \"B2-\"")
    }
}

impl FromStr for BlockId {
    type Err = ParseBlockError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let side = match chars.next() {
            Some('A') => Side::A,
            Some('B') => Side::B,
            _ => return Err(ParseBlockError),
        };
        let rest = chars.as_str();
        let (digits, sign) = match rest.char_indices().last() {
            Some((i, '+')) => (&rest[..i], Sign::Plus),
            Some((i, '-')) => (&rest[..i], Sign::Minus),
            _ => return Err(ParseBlockError),
        };
        let index: u32 = digits.parse().map_err(|_| ParseBlockError)?;
        if index == 0 {
            return Err(ParseBlockError);
        }
        Ok(BlockId { side, index, sign })
    }
}

/// An edge `A_i^s – B_j^t` of the template graph on blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockPair {
    pub a: BlockId,
    pub b: BlockId,
}

impl BlockPair {
    pub fn new(a: BlockId, b: BlockId) -> Self {
        debug_assert!(a.side == Side::A && b.side == Side::B);
        BlockPair { a, b }
    }
}

impl fmt::Display for BlockPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.a, self.b)
    }
}

impl FromStr for BlockPair {
    type Err = ParseBlockError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once('|').ok_or(ParseBlockError)?;
        let (a, b): (BlockId, BlockId) = (a.parse()?, b.parse()?);
        if a.side != Side::A || b.side != Side::B {
            return Err(ParseBlockError);
        }
        Ok(BlockPair { a, b })
    }
}
