import logging
import os

logger = logging.getLogger(__name__)

ORDER_CAP_ENV = 'BRACEFORGE_ORDER_CAP'
DEFAULT_ORDER_CAP = 2 ** 16
DEFAULT_ENUMERATION_CAP = 10 ** 8
DEFAULT_COMPLEMENT_CAP = 10 ** 6
DEFAULT_SEED = 0
DEFAULT_RECODINGS = 100
# Cells (equations times unknowns) allowed for the literal all-pairs coboundary system.
ALL_PAIRS_CELL_CAP = 2 ** 22


def get_order_cap():
    raw_cap = os.environ.get(ORDER_CAP_ENV)
    if raw_cap is None:
        return DEFAULT_ORDER_CAP
    try:
        order_cap = int(raw_cap)
    except ValueError:
        logger.warning('%s=%r is not an integer, using DEFAULT_ORDER_CAP: %d',
                       ORDER_CAP_ENV, raw_cap, DEFAULT_ORDER_CAP)
        return DEFAULT_ORDER_CAP
    if order_cap < 1:
        logger.warning('%s must be positive, using DEFAULT_ORDER_CAP: %d', ORDER_CAP_ENV, DEFAULT_ORDER_CAP)
        return DEFAULT_ORDER_CAP
    return order_cap
