# PyBlowup - Hilbert coefficients and blowup certificates for Python
# Copyright (C) 2024 PyBlowup contributors
#
# This file is part of PyBlowup.
#
# PyBlowup is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# PyBlowup is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with PyBlowup.  If not, see <http://www.gnu.org/licenses/>.

import json
import logging
from typing import Any, Dict, Optional, Union

from blowup.errors import ConfigurationError

logger = logging.getLogger(__name__)


class AnalysisConfig:
    """
    Budgets, windows and sampling parameters of an analysis run. This class contains default config in its source

    Instances snapshot the class-level defaults at construction time and then apply their own overrides, so a
    worker process can be handed a plain ``dict`` and rebuild exactly the configuration of the parent.

    Args:
        values (``dict``, *optional*): Overrides of the defaults

    Raises:
        :class:`~blowup.errors.ConfigurationError` if an unknown key is given
    """

    # default config
    config = {
        'budget_pairs': 10 ** 6,
        'budget_basis': 10 ** 5,
        'verify_intersections': True,
        'exponent_cap': 2 ** 31 - 1,
        'default_prime': 2 ** 31 - 1,
        'fp_sampling_floor': 10 ** 4,
        'sample_bound': 500,
        'superficial_start': 2,
        'superficial_window': 3,
        'superficial_retries': 10,
        'reduction_max': 10,
        'reduction_retries': 5,
        'rr_confirm': 2,
        'rr_max_steps': 20,
        'rr_window': 5,
        'hilbert_vanish_window': 3,
        'hilbert_max_terms': 40,
        'coefficient_count': 4,
        'normality_window': None,
        'power_window': 3,
        'power_test_bound': 12,
        'power_depth_max': 4,
        'power_depth_probe': False,
        'veronese_degrees': [2, 3],
    }

    def __init__(self, values: Optional[Dict[str, Any]] = None):
        self.values = dict(self.config)
        if values:
            self.update(values)

    def __getattr__(self, item: str) -> Any:
        try:
            return self.__dict__['values'][item]
        except KeyError:
            raise AttributeError(item) from None

    def __eq__(self, other) -> bool:
        return isinstance(other, AnalysisConfig) and self.values == other.values

    def __repr__(self) -> str:
        return 'AnalysisConfig({!r})'.format(self.values)

    def update(self, values: Dict[str, Any]) -> 'AnalysisConfig':
        unknown = sorted(set(values) - set(self.config))
        if unknown:
            raise ConfigurationError('unknown config keys: {}'.format(', '.join(unknown)))
        self.values.update(values)
        return self

    def replace(self, **values) -> 'AnalysisConfig':
        """
        Copy of this config with some values changed
        """
        return AnalysisConfig(dict(self.values, **values))

    def normality_window_for(self, dimension: int) -> int:
        window = self.values['normality_window']
        return window if window else max(dimension - 1, 3)

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.values)

    @classmethod
    def from_json(cls, _json: Union[str, bytes]) -> 'AnalysisConfig':
        try:
            return cls(json.loads(_json))
        except json.JSONDecodeError as e:
            raise ConfigurationError('error parsing analysis config: {}'.format(e)) from e

    @classmethod
    def set_config(cls, _json: Union[str, dict]):
        """
        Set global default config

        Args:
            _json (``str`` | ``dict``): either JSON-encoded object or ``dict`` containing config values, \
            keys not given keep their default values

        Raises:
            :class:`~blowup.errors.ConfigurationError` if JSON parsing (for ``str`` argument) fails or an \
            unknown key is given
        """
        try:
            if isinstance(_json, dict):
                _json = json.dumps(_json)
            values = json.loads(_json)
        except json.JSONDecodeError as e:
            raise ConfigurationError('error parsing analysis config: {}'.format(e)) from e
        except TypeError as e:
            raise ConfigurationError('error building JSON: {}'.format(e)) from e
        unknown = sorted(set(values) - set(cls.config))
        if unknown:
            raise ConfigurationError('unknown config keys: {}'.format(', '.join(unknown)))
        logger.debug('default analysis config updated: %s', values)
        cls.config.update(values)

    @classmethod
    def set_budget_config(cls, pairs: int = 10 ** 6, basis: int = 10 ** 5):
        """
        Helper method for setting Gröbner computation budgets

        Args:
            pairs (``int``): Maximum number of S-pair reductions per basis computation
            basis (``int``): Maximum number of basis elements

        Raises:
            Same as :meth:`set_config`
        """
        cls.set_config({'budget_pairs': pairs, 'budget_basis': basis})


def resolve_config(config: Optional[AnalysisConfig]) -> AnalysisConfig:
    return config if config is not None else AnalysisConfig()


__all__ = ['AnalysisConfig', 'resolve_config']
