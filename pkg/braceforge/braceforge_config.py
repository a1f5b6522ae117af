from .config import (
    DEFAULT_COMPLEMENT_CAP, DEFAULT_ENUMERATION_CAP, DEFAULT_RECODINGS, DEFAULT_SEED, get_order_cap
)


class BraceforgeConfig:
    def __init__(self, order_cap=None, enumeration_cap=DEFAULT_ENUMERATION_CAP,
                 complement_cap=DEFAULT_COMPLEMENT_CAP, seed=DEFAULT_SEED, recodings=DEFAULT_RECODINGS):
        self.order_cap = get_order_cap() if order_cap is None else order_cap
        self.enumeration_cap = enumeration_cap
        self.complement_cap = complement_cap
        self.seed = seed
        self.recodings = recodings

    @classmethod
    def from_environ(cls):
        return cls()

    def __str__(self):
        return ("Braceforge config:\n--Order cap: {}\n--Enumeration cap: {}\n--Complement cap: {}\n--Seed: {}\n"
                "--Recodings: {}\n").format(
            self.order_cap,
            self.enumeration_cap,
            self.complement_cap,
            self.seed,
            self.recodings)
