"""Reference values computed once with mpmath at 40 digits and frozen.

They are independent of the package and kept literal on purpose.
"""

# (z, Gamma(z))
GAMMA_REFERENCE = [
    (1, (1+0j)),
    (2, (1+0j)),
    (3, (2+0j)),
    (4, (6+0j)),
    (5, (24+0j)),
    (6, (120+0j)),
    (10, (362880+0j)),
    (15, (87178291200+0j)),
    (0.5, (1.772453850905516+0j)),
    (1.5, (0.886226925452758+0j)),
    (2.5, (1.329340388179137+0j)),
    (3.5, (3.3233509704478426+0j)),
    (5.5, (52.34277778455352+0j)),
    (-0.5, (-3.544907701811032+0j)),
    (-1.5, (2.363271801207355+0j)),
    (-2.5, (-0.9453087204829419+0j)),
    (-3.5, (0.2700882058522691+0j)),
    (0.1, (9.51350769866873+0j)),
    (7.3, (1271.4236336639087+0j)),
    (-2.7, (-0.931082784838964+0j)),
    ((1+1j), (0.49801566811835607-0.15494982830181067j)),
    ((0.5+2j), (0.08985517670643163-0.06049376029288757j)),
    ((-1.5+0.7j), (0.509843375264393+0.28204327124973516j)),
    ((3-4j), (0.0052255384713692146+0.1725470792943002j)),
    ((0.25-6j), (-4.466761568081911e-05+0.0001213139489514852j)),
]

# (pair, lambda, c(lambda)) with the unit normalisation of c_formula
C_FORMULA_REFERENCE = [
    ('u:1:0', 0.7, (1.006164940346102+0j)),
    ('u:1:0', 1.3, (0.44986637359113574+0j)),
    ('u:1:0', (2.1+0.4j), (0.2204735986347693-0.05916581673983168j)),
    ('u:1:0', (2.7-0.4j), (0.15839399065193527+0.033415451974223465j)),
    ('u:2:0', 0.7, (0.8936079328853612+0j)),
    ('u:2:0', 1.3, (0.3165805359958885+0j)),
    ('u:2:0', (2.1+0.4j), (0.11642795470515915-0.04527989206739811j)),
    ('u:2:0', (2.7-0.4j), (0.07278600741228959+0.022644693243752824j)),
    ('u:1:1', 0.7, (0.6456317315096735+0j)),
    ('u:1:1', 1.3, (0.4186777588545625+0j)),
    ('u:1:1', (2.1+0.4j), (0.3031345760727253-0.03478841309202936j)),
    ('u:1:1', (2.7-0.4j), (0.2629557430724467+0.02273402941189963j)),
    ('u:0:1', 0.7, (0.12325520519239747+0j)),
    ('u:0:1', 1.3, (0.19006854284225488+0j)),
    ('u:0:1', (2.1+0.4j), (0.2591028415801717+0.029735231140531955j)),
    ('u:0:1', (2.7-0.4j), (0.3003816324031553-0.025969711807991718j)),
    ('u:0:2', 0.7, (0.014526713958967657+0j)),
    ('u:0:2', 1.3, (0.009420249574227659+0j)),
    ('u:0:2', (2.1+0.4j), (0.08722627709933688+0.057557648299341874j)),
    ('u:0:2', (2.7-0.4j), (0.18719686464699076-0.07388897757101039j)),
    ('u:2:1', 0.7, (1.006164940346102+0j)),
    ('u:2:1', 1.3, (0.44986637359113574+0j)),
    ('u:2:1', (2.1+0.4j), (0.2204735986347693-0.05916581673983168j)),
    ('u:2:1', (2.7-0.4j), (0.15839399065193527+0.033415451974223465j)),
    ('osp:3:0', 0.7, (0.9400036009724219+0j)),
    ('osp:3:0', 1.3, (0.4271291065730518+0j)),
    ('osp:3:0', (2.1+0.4j), (0.21237978573334948-0.05591574292074695j)),
    ('osp:3:0', (2.7-0.4j), (0.15339665383623083+0.03181473066199333j)),
    ('osp:2:1', 0.7, (1+0j)),
    ('osp:2:1', 1.3, (1+0j)),
    ('osp:2:1', (2.1+0.4j), (1+1.3179528915337028e-42j)),
    ('osp:2:1', (2.7-0.4j), (1-3.578440035458797e-42j)),
    ('osp:1:1', 0.7, (0.28274875253429144+0j)),
    ('osp:1:1', 1.3, (0.7708708047268006+0j)),
    ('osp:1:1', (2.1+0.4j), (1.1824487368083745+0.16686006333431638j)),
    ('osp:1:1', (2.7-0.4j), (1.408836380405792-0.1409369611295538j)),
    ('osp:0:1', 0.7, (-0.30000000000000004+0j)),
    ('osp:0:1', 1.3, (0.30000000000000004+0j)),
    ('osp:0:1', (2.1+0.4j), (1.1+0.4j)),
    ('osp:0:1', (2.7-0.4j), (1.7000000000000002-0.4j)),
    ('osp:0:2', 0.7, (0.39000000000000007+0j)),
    ('osp:0:2', 1.3, (-0.21000000000000002+0j)),
    ('osp:0:2', (2.1+0.4j), (-0.04999999999999991+0.4800000000000001j)),
    ('osp:0:2', (2.7-0.4j), (1.0300000000000005-0.9600000000000002j)),
    ('osp:2:2', 0.7, (-0.30000000000000004+0j)),
    ('osp:2:2', 1.3, (0.30000000000000004+0j)),
    ('osp:2:2', (2.1+0.4j), (1.1+0.4j)),
    ('osp:2:2', (2.7-0.4j), (1.7000000000000002-0.4j)),
    ('osp:5:1', 0.7, (0.9400036009724219+0j)),
    ('osp:5:1', 1.3, (0.4271291065730518+0j)),
    ('osp:5:1', (2.1+0.4j), (0.21237978573334948-0.05591574292074695j)),
    ('osp:5:1', (2.7-0.4j), (0.15339665383623083+0.03181473066199333j)),
]
