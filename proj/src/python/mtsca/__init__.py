# Copyright 2026 The mtsca Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Metamorphic testing harness for static analyzers."""

from ._mtsca import (
    JavaSyntaxError,
    ReportFormatError,
    analyze,
    compare,
    format,
    mutate,
    operators,
    parse_report,
    rules,
    run_campaign,
    weaknesses,
)

__all__ = [
    "JavaSyntaxError",
    "ReportFormatError",
    "analyze",
    "compare",
    "format",
    "mutate",
    "operators",
    "parse_report",
    "rules",
    "run_campaign",
    "weaknesses",
]
