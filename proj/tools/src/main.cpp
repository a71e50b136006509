#include <pthread.h>

#include <iostream>

#include "cfx/cli.hpp"

namespace {

struct Job {
  std::vector<std::string> args;
  int status = 0;
};

void* run_job(void* arg) {
  auto* job = static_cast<Job*>(arg);
  job->status = cfx::cli::run(job->args, std::cout, std::cerr);
  return nullptr;
}

}  // namespace

// Coercions evaluate recursively, so large --fuel budgets need a deep stack.
int main(int argc, char** argv) {
  Job job{std::vector<std::string>(argv + 1, argv + argc)};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t{1} << 30);
  pthread_t thread;
  if (pthread_create(&thread, &attr, run_job, &job) != 0) return cfx::cli::run(job.args, std::cout, std::cerr);
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  return job.status;
}
