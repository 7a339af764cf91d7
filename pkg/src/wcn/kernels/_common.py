"""Flag layout shared by both kernel backends."""

# Set while every prime p | n satisfies (p - 1) | (n - 1).
KORSELT = 1
SQUAREFREE = 2
# p | (n/p - 1) for every prime p | n
GIUGA = 4
# p^2 | (n - p) for every prime p | n
WEAK_GIUGA = 8
ALL_FLAGS = KORSELT | SQUAREFREE | GIUGA | WEAK_GIUGA

# omega(n) <= 15 for n < 2**64
MAX_OMEGA = 16

# Largest modulus the vectorized mulmod handles exactly (float quotient trick).
MULMOD_LIMIT = 1 << 50
