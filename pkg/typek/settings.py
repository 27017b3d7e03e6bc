from typek.utils import TABLES_FILE, find_data_file

TABLES_PATH = find_data_file(TABLES_FILE)

# total degree for the two and three variable K3 families
K3_TRUNC = 8
D8_TRUNC = 6
# steps of q^(1/6) for the elliptic family
ELLIPTIC_TRUNC = 20

DISC_GROUP_GUARD = 2 ** 20
FINGERPRINT_GUARD = 2 ** 14
GROUP_ORDER_GUARD = 10 ** 4

RANDOM_SEED = 20211

# number of random operator combinations tried on the three variable family
D8_RANDOM_OPERATORS = 20


def default_trunc(suite: str) -> int:
    """
    args:
        suite: name of a verification suite
    returns:
        the truncation used when --trunc is not given
    """
    if suite == 'pf-elliptic':
        return ELLIPTIC_TRUNC
    elif suite == 'pf-d8':
        return D8_TRUNC
    else:
        return K3_TRUNC
