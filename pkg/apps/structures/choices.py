from django.db import models


class Reference(models.TextChoices):
    CENTER = 'center', 'Graph center'
    BN = 'bn', 'Base node'


class EpsVariant(models.TextChoices):
    # Remoteness weight eps_ref + r_i (constant eccentricity) or eps_i + r_i.
    CENTER = 'center', 'Reference eccentricity'
    PER_VERTEX = 'per-vertex', 'Per-vertex eccentricity'


class H21Normalization(models.TextChoices):
    ROW = 'row', 'Normalize within each contour'
    GLOBAL = 'global', 'Normalize over all contours'


class Scenario(models.TextChoices):
    CONNECTIVITY = 'connectivity', 'Degree sum fixed by connectivity'
    BRANCHING = 'branching', 'Limited branching rho_i <= R'
    REMOTENESS = 'remoteness', 'Limited remoteness r_i <= d'
    CONTOUR_VERTICES = 'contour-vertices', 'Limited degree and size of contours'
    CONTOUR_COMPLEXITY = 'contour-complexity', 'Limited contour complexity C_i <= C_max'
    BRANCH_FREQUENCY = 'branch-frequency', 'Limited branch frequency F^j <= F_max'


class OutputFormat(models.TextChoices):
    JSON = 'json', 'JSON'
    CSV = 'csv', 'CSV'
    TABLE = 'table', 'Text table'
