class VerdictStatus:
    HOLDS = 'HOLDS'
    FAILS = 'FAILS'


class CertificateStatus:
    SOLVABLE = 'SOLVABLE'
    UNSOLVABLE = 'UNSOLVABLE'
    SPLIT = 'SPLIT'
    NONSPLIT = 'NONSPLIT'
    INCONCLUSIVE = 'INCONCLUSIVE'


class GammaRelation:
    SAME = 'SAME'
    NOT_SAME = 'NOT_SAME'
