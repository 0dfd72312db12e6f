import java.util.Arrays;
import java.util.Random;
import java.util.Scanner;

public class Converter31 {
  static void sortArray(int[] scores) {
    for (int k = 0; k < scores.length - 1; k++) {
      for (int m = 0; m < scores.length - 1 - k; m++) {
        if (scores[m] > scores[m + 1]) {
          int tmp = scores[m];
          scores[m] = scores[m + 1];
          scores[m + 1] = tmp;
        }
      }
    }
  }

  public static double bodyMassIndex(double wgt, double hgt) {
    double value = wgt / Math.pow(hgt, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static int find(int[] scores, int key) {
    for (int k = 0; k < scores.length; k++) {
      if (scores[k] == key) {
        return k;
      }
    }
    return -1;
  }

  public static int totalOf(int[] scores) {
    int sum = 0;
    for (int k = 0; k < scores.length; k++) {
      sum += scores[k];
    }
    return sum;
  }

  public static int digitSum(int num) {
    int sum = 0;
    while (num > 0) {
      sum += num % 10;
      num /= 10;
    }
    return sum;
  }

  static double power(double base, int exp) {
    double result = 1;
    for (int k = 0; k < exp; k++) {
      result *= base;
    }
    return result;
  }

  static int maxValue(int[] scores) {
    int max = scores[0];
    for (int k = 1; k < scores.length; k++) {
      if (scores[k] > max) {
        max = scores[k];
      }
    }
    return max;
  }

  static boolean divisibleByTwo(int num) {
    return num % 2 == 0;
  }

  static int fibonacci(int num) {
    int prev = 0;
    int curr = 1;
    for (int k = 0; k < num; k++) {
      int next = prev + curr;
      prev = curr;
      curr = next;
    }
    return prev;
  }

  static int[] fillRandom(int size) {
    Random rand = new Random(42);
    int[] scores = new int[size];
    for (int k = 0; k < size; k++) {
      scores[k] = rand.nextInt(100);
    }
    return scores;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {9, 3, 4, 5};
    sortArray(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println("BMI: " + bodyMassIndex(62.5, 1.79));
    int pos = find(numbers, 4);
    System.out.println("Found at " + pos);
    System.out.println("Sum: " + totalOf(numbers));
    System.out.println("Digits: " + digitSum(81852));
    System.out.println(power(2, 10));
    int top = maxValue(numbers);
    System.out.println("Max is " + top);
    if (divisibleByTwo(2)) {
      System.out.println("even");
    } else {
      System.out.println("odd");
    }
    System.out.println("Fib: " + fibonacci(19));
    int[] random = fillRandom(8);
    System.out.println(random.length);
    sc.close();
  }
}
