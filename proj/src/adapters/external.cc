// Copyright 2026 The mtsca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "mtsca/adapters/adapters.h"

namespace mtsca::adapters {
namespace {

namespace fs = std::filesystem;

size_t Occurrences(std::string_view text, std::string_view needle) {
  size_t n = 0;
  for (size_t pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::kPmdXml:
    case ReportFormat::kSpotBugsXml: return ".xml";
    case ReportFormat::kSarif: return ".sarif";
    case ReportFormat::kMiniJson: return ".ndjson";
  }
  return "";
}

// Removes the working directory on every exit path.
struct WorkDir {
  fs::path path;
  ~WorkDir() {
    std::error_code ec;
    if (!path.empty()) fs::remove_all(path, ec);
  }
};

}  // namespace

void AnalyzerSpec::Validate() const {
  if (name.empty()) throw std::invalid_argument("analyzer spec: name is empty");
  for (auto ph : {kInputPlaceholder, kOutputPlaceholder}) {
    size_t n = Occurrences(command, ph);
    if (n != 1) {
      throw std::invalid_argument("analyzer spec '" + name + "': placeholder " + std::string(ph) +
                                  " must appear exactly once, found " + std::to_string(n));
    }
  }
  if (timeout_seconds <= 0) throw std::invalid_argument("analyzer spec: timeout must be positive");
}

std::string AnalyzerSpec::Render(const std::string& input_dir,
                                 const std::string& output_file) const {
  Validate();
  std::string out = command;
  out.replace(out.find(kInputPlaceholder), kInputPlaceholder.size(), ShellQuote(input_dir));
  out.replace(out.find(kOutputPlaceholder), kOutputPlaceholder.size(), ShellQuote(output_file));
  return out;
}

AnalyzerSpec AnalyzerSpec::Load(const std::string& path) {
  boost::property_tree::ptree kv;
  try {
    boost::property_tree::read_ini(path, kv);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw std::invalid_argument("analyzer spec " + path + ": " + e.what());
  }
  AnalyzerSpec spec;
  spec.name = kv.get<std::string>("name", "");
  spec.command = kv.get<std::string>("command", "");
  spec.format = ParseFormat(kv.get<std::string>("format", "MiniJSON"));
  try {
    spec.timeout_seconds = kv.get<int>("timeout", 60);
  } catch (const boost::property_tree::ptree_bad_data&) {
    throw std::invalid_argument("analyzer spec " + path + ": timeout is not an integer");
  }
  spec.Validate();
  return spec;
}

RawReport RunExternal(const AnalyzerSpec& spec, const std::string& input_dir,
                      const std::string& work_root) {
  spec.Validate();
  fs::path root = work_root.empty() ? fs::temp_directory_path() : fs::path(work_root);
  fs::create_directories(root);
  std::string templ = (root / "mtsca-run-XXXXXX").string();
  if (!mkdtemp(templ.data())) {
    throw SpawnFailure("cannot create working directory under " + root.string() + ": " +
                       std::strerror(errno));
  }
  WorkDir work{templ};
  fs::path report = work.path / ("report" + Extension(spec.format));
  std::string command = spec.Render(fs::absolute(input_dir).string(), report.string());
  std::string log = (work.path / "output.log").string();
  std::string dir = work.path.string();

  pid_t pid = fork();
  if (pid < 0) throw SpawnFailure(std::string("fork failed: ") + std::strerror(errno));
  if (pid == 0) {
    setpgid(0, 0);
    if (chdir(dir.c_str()) != 0) _exit(126);
    int fd = open(log.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd >= 0) {
      dup2(fd, 1);
      dup2(fd, 2);
      close(fd);
    }
    int null = open("/dev/null", O_RDONLY);
    if (null >= 0) {
      dup2(null, 0);
      close(null);
    }
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);

  auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(spec.timeout_seconds);
  int status = 0;
  while (true) {
    pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) break;
    if (r < 0 && errno != EINTR) throw SpawnFailure(std::string("waitpid: ") + std::strerror(errno));
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
      }
      throw Timeout("analyzer '" + spec.name + "' exceeded " +
                    std::to_string(spec.timeout_seconds) + "s");
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  // Stragglers the command left in its group.
  kill(-pid, SIGKILL);

  RawReport raw;
  raw.format = spec.format;
  if (WIFEXITED(status)) {
    raw.exit_status = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    raw.exit_status = 128 + WTERMSIG(status);
  }
  bool have_report = fs::exists(report);
  if (raw.exit_status == 126 || raw.exit_status == 127 || (raw.exit_status != 0 && !have_report)) {
    std::string out = Slurp(log);
    if (out.size() > 400) out = out.substr(out.size() - 400);
    throw SpawnFailure("analyzer '" + spec.name + "' exited with status " +
                       std::to_string(raw.exit_status) + " and no report" +
                       (out.empty() ? "" : ": " + out));
  }
  if (have_report) raw.content = Slurp(report);
  return raw;
}

}  // namespace mtsca::adapters
