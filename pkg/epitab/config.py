"""
Configuration constants for epitab.

These are defaults for the decision procedure, the model oracle and logging.
All of them can be overridden per call (solver factory arguments, CLI flags).

Configuration priority (highest to lowest):
1. User config file (~/.epitab.json)
2. Environment variables
3. Defaults in this file
"""
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

# Logging settings
LOG_LEVEL = os.getenv('EPITAB_LOG_LEVEL', 'INFO')
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# ============================================================================
# Tableau settings
# ============================================================================

# Rank update: False = min over all marked successors (path existence),
# True = the printed "1 + max over labels of min over successors" formula
STRICT_RANK = os.getenv('EPITAB_STRICT_RANK', 'false').lower() in ('1', 'true', 'yes')

# Decision clause scope for fully expanded sets: 'closure' or 'subformulae'
DECISION_SCOPE = os.getenv('EPITAB_DECISION_SCOPE', 'closure')
DECISION_SCOPES = ('closure', 'subformulae')

# What to do with a single-agent input: 'error' rejects it, 'warn' proceeds
SINGLE_AGENT_POLICY = os.getenv('EPITAB_SINGLE_AGENT_POLICY', 'error')

# ============================================================================
# Model oracle settings
# ============================================================================

ORACLE_MAX_STATES = int(os.getenv('EPITAB_ORACLE_MAX_STATES', '4'))
ORACLE_STATE_LIMIT = int(os.getenv('EPITAB_ORACLE_STATE_LIMIT', '5'))
ORACLE_MAX_ATOMS = 2


# ============================================================================
# User Configuration File Support
# ============================================================================

def _get_config_file_path() -> Path:
    """Get the path to the user configuration file."""
    return Path.home() / '.epitab.json'


def _load_user_config() -> Optional[Dict[str, Any]]:
    """
    Load user configuration from ~/.epitab.json if it exists.

    Returns:
        Configuration dictionary or None if file doesn't exist or is invalid
    """
    config_file = _get_config_file_path()

    if not config_file.exists():
        return None

    try:
        with open(config_file, 'r') as f:
            return json.load(f)
    except (json.JSONDecodeError, IOError) as e:
        print(f"Warning: Failed to load user config from {config_file}: {e}")
        return None


@dataclass(frozen=True)
class RunConfig:
    """
    Settings of one CLI run.

    Attributes:
        agents: Declared agent names (None: agents occurring in the formula)
        strict_rank: Use strict ranks in elimination rule E3
        decision_scope: 'closure' or 'subformulae'
        oracle_max_states: Largest model size the oracle tries
        dot_pretableau: DOT export path of the pretableau
        dot_initial: DOT export path of the initial tableau
        dot_final: DOT export path of the final tableau
        witness: JSON export path of the witness model
        hintikka: JSON export path of the witness Hintikka structure
        trace: Export path of the elimination trace
    """
    agents: Optional[Tuple[str, ...]] = None
    strict_rank: bool = False
    decision_scope: str = 'closure'
    oracle_max_states: int = 4
    dot_pretableau: Optional[Path] = None
    dot_initial: Optional[Path] = None
    dot_final: Optional[Path] = None
    witness: Optional[Path] = None
    hintikka: Optional[Path] = None
    trace: Optional[Path] = None

    def export_paths(self) -> Dict[str, Path]:
        paths = {
            'dot_pretableau': self.dot_pretableau,
            'dot_initial': self.dot_initial,
            'dot_final': self.dot_final,
            'witness': self.witness,
            'hintikka': self.hintikka,
            'trace': self.trace,
        }
        return {name: path for name, path in paths.items() if path is not None}


def load_run_config(**overrides) -> RunConfig:
    """
    Build a RunConfig from the configured defaults and explicit overrides.

    Overrides that are None keep the default.

    Raises:
        ValueError: If an option is out of range or an export path is not writable
    """
    values: Dict[str, Any] = {
        'agents': None,
        'strict_rank': bool(STRICT_RANK),
        'decision_scope': DECISION_SCOPE,
        'oracle_max_states': int(ORACLE_MAX_STATES),
    }
    for key, value in overrides.items():
        if value is not None:
            values[key] = value

    agents = values['agents']
    if isinstance(agents, str):
        agents = [part.strip() for part in agents.split(',') if part.strip()]
    if agents is not None:
        values['agents'] = tuple(agents)

    if values['decision_scope'] not in DECISION_SCOPES:
        raise ValueError(
            f"Unknown decision scope: {values['decision_scope']}. Choose from: {DECISION_SCOPES}"
        )
    max_states = int(values['oracle_max_states'])
    if not 1 <= max_states <= int(ORACLE_STATE_LIMIT):
        raise ValueError(
            f"Oracle state bound must be between 1 and {ORACLE_STATE_LIMIT}, got {max_states}"
        )
    values['oracle_max_states'] = max_states

    for name in ('dot_pretableau', 'dot_initial', 'dot_final', 'witness', 'hintikka', 'trace'):
        if values.get(name) is None:
            continue
        path = Path(values[name])
        parent = path.parent if str(path.parent) else Path('.')
        if not parent.is_dir():
            raise ValueError(f"Cannot write {name.replace('_', '-')} to {path}: no such directory")
        if path.is_dir():
            raise ValueError(f"Cannot write {name.replace('_', '-')} to {path}: is a directory")
        values[name] = path

    return RunConfig(**values)


def apply_user_config():
    """
    Apply user configuration from ~/.epitab.json to override defaults.
    This function updates the module-level constants with user config values.
    """
    user_config = _load_user_config()

    if not user_config:
        return

    config_mapping = {
        'log_level': 'LOG_LEVEL',
        'strict_rank': 'STRICT_RANK',
        'decision_scope': 'DECISION_SCOPE',
        'single_agent_policy': 'SINGLE_AGENT_POLICY',
        'oracle_max_states': 'ORACLE_MAX_STATES',
        'oracle_state_limit': 'ORACLE_STATE_LIMIT',
    }

    globals_dict = globals()
    for config_key, global_name in config_mapping.items():
        if config_key in user_config:
            globals_dict[global_name] = user_config[config_key]


# Apply user config on module import
apply_user_config()
