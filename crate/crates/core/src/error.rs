use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("order {order} exceeds the cap of {cap} vertices")]
    OrderCap { order: usize, cap: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: &'static str },
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("decomposition host undefined: target must have at least one edge")]
    UndefinedHost,
}
