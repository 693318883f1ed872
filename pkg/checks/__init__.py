"""
Auto-discovery loader for verification checks.

Scans all .py files in this directory, imports Check subclasses,
and returns them as a dict keyed by check.name, in report order.
"""

import importlib
import inspect
import os
import sys

# Ensure project root is on path so check files can import check_base
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from check_base import Check
from config import log_message


def discover_checks(directory=None):
    """
    Discover and instantiate all enabled Check subclasses from .py files.

    Returns:
        dict mapping check.name -> Check instance, sorted by (order, name)
    """
    if directory is None:
        directory = os.path.dirname(os.path.abspath(__file__))

    checks = {}

    for filename in sorted(os.listdir(directory)):
        if filename.startswith('_') or not filename.endswith('.py'):
            continue

        module_name = f"checks.{filename[:-3]}"

        try:
            module = importlib.import_module(module_name)
        except Exception as e:
            log_message(f"[WARN] Failed to load check module {filename}: {e}")
            continue

        for attr_name, attr_value in inspect.getmembers(module, inspect.isclass):
            if (issubclass(attr_value, Check)
                    and attr_value is not Check
                    and attr_value.name is not NotImplemented
                    and attr_value.__module__ == module.__name__):
                try:
                    instance = attr_value()
                except Exception as e:
                    log_message(f"[WARN] Failed to instantiate {attr_name}: {e}")
                    continue
                if instance.enabled:
                    checks[instance.name] = instance

    return dict(sorted(checks.items(), key=lambda item: (item[1].order, item[0])))
